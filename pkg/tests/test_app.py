"""End-to-end runs of the floer command line through main(argv)."""

import io
import json
from pathlib import Path

import pandas as pd
import pytest
import yaml

import app
from utils.config_utils import MAX_GENUS_ENV

GOLDEN = Path(__file__).parent / "golden" / "framed_table_1_8.txt"
SMALL_BUDGETS = {
    "max_genus": 2, "cross_path_genus": 2, "membership_r": 2, "proportionality_genus": 1,
    "structure_genus": 2, "minus_shape_genus": 2, "plus_shape_genus": 1, "classical_genus": 2,
    "nesting_genus": 2, "specialization_k": 6, "identity_genus": 4, "s_identity_genus": 6,
    "table_genus": 4, "invariant_genus": 2, "samples": 2,
}


@pytest.fixture(autouse=True)
def _no_environment_cap(monkeypatch):
    monkeypatch.delenv(MAX_GENUS_ENV, raising=False)


@pytest.fixture
def small_config(tmp_path):
    path = tmp_path / "small.yaml"
    path.write_text(yaml.safe_dump({"budgets": SMALL_BUDGETS}), encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = app.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_genus_range():
    assert app.parse_genus_range("1..8") == (1, 8)
    assert app.parse_genus_range("3") == (3, 3)
    for bad in ("0..2", "4..2", "a..b", ""):
        with pytest.raises(app.UsageError):
            app.parse_genus_range(bad)


def test_framed_table_matches_golden(capsys):
    code, out, _ = run(capsys, "table", "--which", "framed", "--genus-range", "1..8")
    assert code == app.EXIT_OK
    assert out == GOLDEN.read_text(encoding="utf-8")


def test_critical_table_rows(capsys):
    code, out, _ = run(capsys, "table", "--which", "critical", "--genus-range", "1..8")
    assert code == app.EXIT_OK
    lines = out.splitlines()
    assert lines[2].split()[-8:] == ["0", "2", "44", "188", "464", "2188", "14104", "59096"]
    assert lines[3].split()[-8:] == ["2", "10", "16", "92", "796", "3356", "9920", "43864"]
    assert lines[4].split()[-8:] == ["4", "24", "120", "560", "2520", "11088", "48048", "205920"]


def test_table_json_envelope(capsys):
    code, out, _ = run(capsys, "table", "--genus-range", "3..4", "--format", "json")
    assert code == app.EXIT_OK
    envelope = json.loads(out)
    assert envelope["command"] == "table"
    assert envelope["summary"]["passed"] is True
    assert envelope["config"]["genus_range"] == [3, 4]
    assert [r["framed_row"] for r in envelope["results"]] == [[29, 29, 15, 15], [131, 131, 83, 83]]
    assert envelope["results"][1]["framed_total"] == 428


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--genus-range", "1..2", "--format", "csv")
    assert code == app.EXIT_OK
    frame = pd.read_csv(io.StringIO(out))
    assert len(frame) == 8
    assert frame["betti"].sum() == 18


def test_table_cross_check(capsys):
    code, out, _ = run(capsys, "table", "--genus-range", "1..2", "--cross-check", "--max-genus", "2",
                       "--format", "json")
    assert code == app.EXIT_OK
    envelope = json.loads(out)
    assert envelope["results"][1]["provenance"]["framed_betti"] == ["closed_form", "assembly", "linear_algebra"]


def test_nilpotency(capsys):
    code, out, _ = run(capsys, "nilpotency", "--genus-range", "1..2")
    assert code == app.EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "genus  computed  expected  match"
    assert [line.split() for line in lines[1:]] == [["1", "1", "1", "yes"], ["2", "1", "1", "yes"]]


def test_nilpotency_respects_the_genus_cap(capsys, monkeypatch):
    code, _, err = run(capsys, "nilpotency", "--genus-range", "1..3", "--max-genus", "2")
    assert code == app.EXIT_USAGE
    assert "exceeds" in err
    monkeypatch.setenv(MAX_GENUS_ENV, "1")
    assert run(capsys, "nilpotency", "--genus-range", "1..2")[0] == app.EXIT_USAGE


@pytest.mark.parametrize("argv", [
    ["nilpotency", "--genus-range", "0..2"],
    ["table", "--genus-range", "5..1"],
    ["groebner", "--family", "Jsideways", "--genus", "2"],
    ["groebner", "--family", "J", "--genus", "0"],
    ["groebner", "--family", "J"],
    ["nilpotency", "--format", "csv"],
    ["verify", "--jobs", "0"],
    [],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == app.EXIT_USAGE


def test_version_exits_cleanly(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == app.EXIT_OK
    assert "floer" in out


def test_groebner_text(capsys):
    code, out, _ = run(capsys, "groebner", "--family", "J", "--genus", "1")
    assert code == app.EXIT_OK
    assert "β - 8" in out
    assert "Degree: 1" in out


def test_groebner_json_for_genus_zero_minus(capsys):
    code, out, _ = run(capsys, "groebner", "--family", "Jminus", "--genus", "0", "--format", "json")
    assert code == app.EXIT_OK
    info = json.loads(out)["results"][0]
    assert info["basis"] == ["1"]
    assert info["degree"] == 0
    assert info["poincare"] == [0, 0, 0, 0]


def test_groebner_minus_genus_four(capsys):
    code, out, _ = run(capsys, "groebner", "--family", "Jminus", "--genus", "4", "--format", "json")
    assert code == app.EXIT_OK
    info = json.loads(out)["results"][0]
    assert info["ring"] == "Q[α, γ]"
    assert info["degree"] == 6
    assert info["initial_ideal"] == ["α⁴", "α²γ", "γ²"]


def _without_timings(text: str) -> dict:
    envelope = json.loads(text)
    envelope.pop("timings")
    return envelope


def test_verify_is_deterministic(capsys, small_config):
    argv = ["verify", "--config", small_config, "--seed", "42", "--format", "json"]
    first_code, first, _ = run(capsys, *argv)
    second_code, second, _ = run(capsys, *argv)
    assert first_code == second_code == app.EXIT_OK
    assert _without_timings(first) == _without_timings(second)
    envelope = json.loads(first)
    assert envelope["summary"]["passed"] is True
    assert envelope["config"]["seed"] == 42
    assert envelope["summary"]["checks"] == len(app.verification_plan(app.Budgets(**SMALL_BUDGETS), 42))


def test_verify_markdown(capsys, small_config):
    code, out, _ = run(capsys, "verify", "--config", small_config)
    assert code == app.EXIT_OK
    assert "**Overall Status:** **PASS**" in out
    assert "No Failures Detected" in out


def test_corrupted_recursion_fails_verification(capsys, small_config):
    code, out, _ = run(capsys, "verify", "--config", small_config, "--corrupt-zeta")
    assert code == app.EXIT_FAILURE
    assert "**FAIL**" in out
    assert "❌" in out


def test_output_file(capsys, tmp_path):
    target = tmp_path / "table.txt"
    code, out, _ = run(capsys, "table", "--genus-range", "1..8", "--out", str(target))
    assert code == app.EXIT_OK
    assert out == ""
    assert target.read_text(encoding="utf-8") == GOLDEN.read_text(encoding="utf-8")


def test_verification_plan_is_ordered_and_known():
    plan = app.verification_plan(app.Budgets(), seed=1)
    assert plan[0][0] == "check_helper_identities"
    assert all(name in app.CHECKS for name, _ in plan)
    assert ("check_table_reproduction", {"max_genus": 8}) in plan
