"""Budgets, the genus cap and override files."""

import json

import pytest
import yaml

from utils.config_utils import (
    MAX_GENUS_ENV,
    Budgets,
    RunConfig,
    get_max_genus_override,
    load_run_config_file,
    resolve_budgets,
)


def test_default_budgets():
    budgets = Budgets()
    assert budgets.max_genus == 6
    assert budgets.cross_path_genus == 5
    assert budgets.table_genus == 8
    assert budgets.membership_r == 6


def test_cap_leaves_closed_form_budgets_alone():
    capped = Budgets().capped(3)
    assert capped.max_genus == 3
    assert capped.structure_genus == 3
    assert capped.membership_r == 3
    assert capped.identity_genus == 10
    assert capped.s_identity_genus == 12
    assert capped.table_genus == 8
    assert capped.specialization_k == 14
    assert capped.samples == 6
    assert Budgets().capped(None) == Budgets()


def test_cap_never_raises_a_budget():
    assert Budgets(max_genus=2).capped(5).max_genus == 2


@pytest.mark.parametrize("bad", [0, -1, True, "3"])
def test_invalid_budget_rejected(bad):
    with pytest.raises(ValueError):
        Budgets(max_genus=bad)


def test_invalid_cap_rejected():
    with pytest.raises(ValueError):
        Budgets().capped(0)


def test_environment_cap(monkeypatch):
    monkeypatch.delenv(MAX_GENUS_ENV, raising=False)
    assert get_max_genus_override() is None
    monkeypatch.setenv(MAX_GENUS_ENV, "4")
    assert get_max_genus_override() == 4
    assert resolve_budgets().max_genus == 4
    assert resolve_budgets(cli_max_genus=2).max_genus == 2


@pytest.mark.parametrize("raw", ["four", "0"])
def test_bad_environment_cap(monkeypatch, raw):
    monkeypatch.setenv(MAX_GENUS_ENV, raw)
    with pytest.raises(ValueError):
        get_max_genus_override()


def test_yaml_overrides(tmp_path, monkeypatch):
    monkeypatch.delenv(MAX_GENUS_ENV, raising=False)
    path = tmp_path / "run.yaml"
    path.write_text(yaml.safe_dump({"seed": 9, "budgets": {"max_genus": 3, "samples": 2}}), encoding="utf-8")
    overrides = load_run_config_file(str(path))
    assert overrides["seed"] == 9
    budgets = resolve_budgets(overrides)
    assert budgets.max_genus == 3
    assert budgets.samples == 2
    assert budgets.table_genus == 8


def test_json_overrides(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"jobs": 2}), encoding="utf-8")
    assert load_run_config_file(str(path)) == {"jobs": 2}


def test_empty_yaml_is_no_override(tmp_path):
    path = tmp_path / "empty.yml"
    path.write_text("", encoding="utf-8")
    assert load_run_config_file(str(path)) == {}


@pytest.mark.parametrize("name, content", [
    ("unknown.yaml", "budgets:\n  bogus_genus: 3\n"),
    ("negative.yaml", "budgets:\n  max_genus: 0\n"),
    ("extra.json", '{"colour": "blue"}'),
    ("broken.json", "{not json"),
    ("settings.toml", "seed = 1"),
])
def test_invalid_override_files(tmp_path, name, content):
    path = tmp_path / name
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ValueError):
        load_run_config_file(str(path))


def test_missing_override_file(tmp_path):
    with pytest.raises(ValueError):
        load_run_config_file(str(tmp_path / "absent.yaml"))


def test_run_config_serializes_budgets():
    payload = RunConfig(command="table", genus_range=(1, 8), budgets=Budgets().capped(4)).to_dict()
    assert payload["genus_range"] == [1, 8]
    assert payload["budgets"]["max_genus"] == 4
    assert payload["command"] == "table"
