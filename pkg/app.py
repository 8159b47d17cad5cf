# floer-ring/app.py
"""
floer: command-line surface for the instanton Floer ring engine.

    floer nilpotency --genus-range 1..6
    floer table --which framed --genus-range 1..8 --format text
    floer groebner --family Jminus --genus 4
    floer verify --max-genus 4 --seed 42 --format json

Exit codes: 0 success, 1 verification failure or mismatch, 2 usage error.
"""

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from typing import Any, Callable, Dict, List, Optional, Tuple

from algebra import __version__
from algebra import betti, ideal_checks
from algebra.munoz import (
    DEFAULT_RING,
    IDEAL_VARIABLES,
    IdealKind,
    MunozRing,
    ZetaKind,
    expected_nilpotency_degree,
    nilpotency_degree,
)
from algebra.polyalg import VARIABLE_NAMES
from reports.export_utils import (
    build_envelope,
    generate_markdown_verify_report,
    genus_report_payload,
    render_groebner_text,
    render_json,
    render_nilpotency_text,
    render_table_text,
    table_to_csv,
)
from utils.config_utils import (
    Budgets,
    RunConfig,
    get_max_genus_override,
    load_environment,
    load_run_config_file,
    resolve_budgets,
)
from utils.logging_utils import log_message, set_log_level

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2
GROEBNER_FAMILIES = ("J", "Jplus", "Jminus", "Jclassical")


class UsageError(ValueError):
    """Invalid command-line input; maps to exit code 2."""


# --- Argument helpers ---
def parse_genus_range(text: str) -> Tuple[int, int]:
    """'A..B' or a single 'A' into an inclusive (A, B) with 1 <= A <= B."""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
        else:
            low = high = int(text)
    except ValueError:
        raise UsageError(f"Genus range must look like A..B, got {text!r}") from None
    if low < 1 or high < low:
        raise UsageError(f"Genus range needs 1 <= A <= B, got {low}..{high}")
    return low, high


def _ring(corrupt: bool) -> MunozRing:
    return MunozRing(corrupt=True) if corrupt else DEFAULT_RING


def _genus_cap(args) -> Optional[int]:
    return args.max_genus if args.max_genus is not None else get_max_genus_override()


def _check_cap(high: int, cap: Optional[int]):
    if cap is not None and high > cap:
        raise UsageError(f"Genus {high} exceeds the genus budget {cap} (--max-genus / FLOER_MAX_GENUS)")


def build_run_config(args) -> RunConfig:
    overrides = load_run_config_file(args.config) if args.config else {}
    budgets = resolve_budgets(overrides, args.max_genus)
    seed = args.seed if args.seed is not None else overrides.get("seed", 0)
    jobs = args.jobs if args.jobs is not None else overrides.get("jobs", 1)
    if jobs < 1:
        raise UsageError(f"--jobs must be >= 1, got {jobs}")
    config = RunConfig(command=args.command, output_format=args.format, budgets=budgets,
                       seed=seed, jobs=jobs, out=args.out)
    if getattr(args, "genus_range", None):
        config = replace(config, genus_range=parse_genus_range(args.genus_range))
    if getattr(args, "genus", None) is not None:
        config = replace(config, genus=args.genus)
    if getattr(args, "family", None):
        config = replace(config, family=args.family)
    if getattr(args, "which", None):
        config = replace(config, which=args.which)
    return config


# --- Commands ---
# Each command returns (envelope, text rendering, exit code).
def cmd_nilpotency(args, config: RunConfig):
    low, high = config.genus_range or (1, config.budgets.max_genus)
    _check_cap(high, _genus_cap(args))
    ring = _ring(args.corrupt_zeta)
    results, timings = [], {}
    for g in range(low, high + 1):
        start = time.perf_counter()
        computed = nilpotency_degree(g, ring)
        timings[f"genus_{g}"] = time.perf_counter() - start
        expected = expected_nilpotency_degree(g)
        results.append({"genus": g, "computed": computed, "expected": expected, "match": computed == expected})
    passed = all(r["match"] for r in results)
    summary = {"passed": passed, "mismatches": [r["genus"] for r in results if not r["match"]]}
    envelope = build_envelope(__version__, "nilpotency", config.to_dict(), results, summary, timings)
    return envelope, render_nilpotency_text(results), EXIT_OK if passed else EXIT_FAILURE


def cmd_table(args, config: RunConfig):
    low, high = config.genus_range or (1, config.budgets.table_genus)
    genera = range(low, high + 1)
    budgets = config.budgets
    start = time.perf_counter()
    if args.cross_check:
        reports = []
        for paths, selected in (
            (("closed_form", "assembly", "linear_algebra"), [g for g in genera if g <= budgets.cross_path_genus]),
            (("closed_form", "assembly"), [g for g in genera if budgets.cross_path_genus < g <= budgets.max_genus]),
            (("closed_form",), [g for g in genera if g > max(budgets.max_genus, budgets.cross_path_genus)]),
        ):
            reports += betti.build_genus_reports(selected, paths, nilpotency=False, jobs=config.jobs,
                                                 corrupt=args.corrupt_zeta)
        reports.sort(key=lambda report: report.genus)
    else:
        reports = betti.build_genus_reports(genera, ("closed_form",), nilpotency=False, jobs=config.jobs)
    timings = {"total_seconds": time.perf_counter() - start}

    which = config.which
    passed = all(report.agreement for report in reports)
    summary = {"passed": passed, "which": which,
               "disagreements": {str(r.genus): r.disagreements for r in reports if r.disagreements}}
    envelope = build_envelope(__version__, "table", config.to_dict(),
                              [genus_report_payload(r) for r in reports], summary, timings)
    if config.output_format == "csv":
        text = table_to_csv(which, reports)
    else:
        rows = {r.genus: (r.framed_betti if which == "framed" else r.critical_betti).relabel(r.epsilon)
                for r in reports}
        text = render_table_text(which, rows)
    return envelope, text, EXIT_OK if passed else EXIT_FAILURE


def groebner_info(family: str, genus: int, ring: MunozRing) -> Dict[str, Any]:
    kind = IdealKind(family)
    ideal = ring.ideal(kind, genus)
    names = ", ".join(VARIABLE_NAMES[i] for i in IDEAL_VARIABLES[kind])
    return {
        "family": kind.value,
        "genus": genus,
        "ring": f"Q[{names}]",
        "basis": [str(p) for p in ideal.gb],
        "initial_ideal": [m.to_string() for m in ideal.gb.initial_ideal()],
        "standard_monomials": [m.to_string() for m in ideal.quotient_basis],
        "degree": ideal.degree,
        "poincare": ideal.poincare(),
        "stats": dict(ideal.gb.stats),
    }


def cmd_groebner(args, config: RunConfig):
    if config.family not in GROEBNER_FAMILIES:
        raise UsageError(f"--family must be one of {', '.join(GROEBNER_FAMILIES)}")
    minimum = 0 if config.family == "Jminus" else 1
    if config.genus is None or config.genus < minimum:
        raise UsageError(f"--genus must be >= {minimum} for {config.family}")
    _check_cap(config.genus, _genus_cap(args))
    start = time.perf_counter()
    info = groebner_info(config.family, config.genus, _ring(args.corrupt_zeta))
    timings = {"total_seconds": time.perf_counter() - start}
    envelope = build_envelope(__version__, "groebner", config.to_dict(), [info], {"passed": True}, timings)
    text = render_groebner_text({**info, "poincare": str(info["poincare"])})
    return envelope, text, EXIT_OK


def verification_plan(budgets: Budgets, seed: int) -> List[Tuple[str, Dict[str, Any]]]:
    """Every check with its arguments, in a fixed order."""
    plan: List[Tuple[str, Dict[str, Any]]] = [
        ("check_helper_identities", {"max_index": budgets.membership_r + 2}),
        ("check_specialization", {"max_k": budgets.specialization_k}),
        ("check_leading_terms", {"max_k": budgets.specialization_k}),
    ]
    plan += [("check_recursion_memberships", {"r": r}) for r in range(1, budgets.membership_r + 1)]
    plan += [("check_odd_genus_proportionality", {"g": g}) for g in range(1, budgets.proportionality_genus + 1, 2)]
    plan += [("check_signed_structure", {"g": g, "seed": seed, "samples": budgets.samples})
             for g in range(1, budgets.structure_genus + 1)]
    plan += [("check_signed_shape", {"kind": ZetaKind.MINUS.value, "g": g})
             for g in range(2, budgets.minus_shape_genus + 1, 2)]
    plan += [("check_signed_shape", {"kind": ZetaKind.PLUS.value, "g": g})
             for g in range(1, budgets.plus_shape_genus + 1, 2)]
    plan += [("check_signed_shape", {"kind": ZetaKind.CLASSICAL.value, "g": g})
             for g in range(1, budgets.classical_genus + 1)]
    plan += [("check_closed_form_poincare", {"g": g}) for g in range(0, budgets.invariant_genus + 1)]
    plan += [("check_principal_cokernels", {"g": g}) for g in range(1, budgets.invariant_genus + 1)]
    plan += [("check_nesting", {"g": g}) for g in range(2, budgets.nesting_genus + 1)]
    for g in range(1, budgets.max_genus + 1):
        plan += [
            ("check_invariant_basis", {"g": g}),
            ("check_eigenvalues", {"g": g}),
            ("check_kernel_cross", {"g": g}),
            ("check_unit_test", {"g": g, "seed": seed, "samples": budgets.samples}),
            ("check_nilpotency", {"g": g}),
        ]
    plan += [("check_three_paths", {"g": g}) for g in range(1, budgets.cross_path_genus + 1)]
    plan += [("check_classical_assembly", {"g": g}) for g in range(1, budgets.classical_genus + 1)]
    plan += [
        ("check_table_reproduction", {"max_genus": budgets.table_genus}),
        ("check_s_identity", {"max_genus": budgets.s_identity_genus}),
    ]
    plan += [("check_betti_identities", {"g": g}) for g in range(1, budgets.identity_genus + 1)]
    return plan


CHECKS: Dict[str, Callable] = {
    name: getattr(module, name)
    for module in (ideal_checks, betti)
    for name in dir(module) if name.startswith("check_")
}
RING_FREE_CHECKS = {"check_helper_identities", "check_table_reproduction", "check_s_identity",
                    "check_betti_identities"}
_WORKER_RINGS: Dict[bool, MunozRing] = {}


def run_check(task: Tuple[str, Dict[str, Any], bool]) -> Dict[str, Any]:
    name, kwargs, corrupt = task
    if name not in RING_FREE_CHECKS:
        ring = _WORKER_RINGS.get(corrupt)
        if ring is None:
            ring = _WORKER_RINGS.setdefault(corrupt, _ring(corrupt))
        kwargs = {**kwargs, "ring": ring}
    return CHECKS[name](**kwargs).to_dict()


def cmd_verify(args, config: RunConfig):
    tasks = [(name, kwargs, args.corrupt_zeta) for name, kwargs in verification_plan(config.budgets, config.seed)]
    log_message('info', f"CLI: running {len(tasks)} checks with {config.jobs} worker(s).")
    start = time.perf_counter()
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(run_check, tasks))
    else:
        reports = [run_check(task) for task in tasks]
    timings = {"total_seconds": time.perf_counter() - start}
    failed = [r["name"] for r in reports if not r["passed"]]
    summary = {"passed": not failed, "checks": len(reports),
               "cases": sum(len(r["cases"]) for r in reports), "failed_checks": failed}
    envelope = build_envelope(__version__, "verify", config.to_dict(), reports, summary, timings)
    text = generate_markdown_verify_report(envelope["results"], envelope["config"])
    return envelope, text, EXIT_OK if not failed else EXIT_FAILURE


COMMANDS = {"nilpotency": cmd_nilpotency, "table": cmd_table, "groebner": cmd_groebner, "verify": cmd_verify}


# --- Parser ---
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text", help="Output format")
    common.add_argument("--out", "-o", help="Write output to this file instead of stdout")
    common.add_argument("--config", help="YAML or JSON file overriding budgets, seed and jobs")
    common.add_argument("--jobs", type=int, default=None, help="Worker processes for per-genus work")
    common.add_argument("--seed", type=int, default=None, help="Seed for sampled checks (default: 0)")
    common.add_argument("--max-genus", type=int, default=None, help="Cap every Gröbner-backed genus budget")
    common.add_argument("--verbose", "-v", action="store_true", help="Log progress to stderr")
    common.add_argument("--corrupt-zeta", action="store_true", help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="floer", description="Exact computations in the instanton Floer ring of Σ×S¹")
    parser.add_argument("--version", action="version", version=f"floer {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    nil_parser = subparsers.add_parser("nilpotency", parents=[common], help="Nilpotency degree of β²−64")
    nil_parser.add_argument("--genus-range", default="1..6", help="Genus range A..B (default: 1..6)")

    table_parser = subparsers.add_parser("table", parents=[common], help="Framed or critical-set betti table")
    table_parser.add_argument("--which", choices=["framed", "critical"], default="framed")
    table_parser.add_argument("--genus-range", default="1..8", help="Genus range A..B (default: 1..8)")
    table_parser.add_argument("--cross-check", action="store_true",
                              help="Also run the Gröbner assembly and linear-algebra paths within budget")

    gb_parser = subparsers.add_parser("groebner", parents=[common], help="Reduced Gröbner basis of an ideal")
    gb_parser.add_argument("--family", required=True, help=f"One of {', '.join(GROEBNER_FAMILIES)}")
    gb_parser.add_argument("--genus", type=int, required=True)

    subparsers.add_parser("verify", parents=[common], help="Run every property suite within budget")
    return parser


def _emit(content: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(content)
        log_message('info', f"CLI: wrote output to {out}.")
    else:
        sys.stdout.write(content)


def main(argv: Optional[List[str]] = None) -> int:
    load_environment()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    if args.verbose:
        set_log_level("info")
    if args.format == "csv" and args.command != "table":
        sys.stderr.write("floer: error: csv output is only available for 'table'\n")
        return EXIT_USAGE

    try:
        config = build_run_config(args)
        envelope, text, code = COMMANDS[args.command](args, config)
    except ValueError as e:
        log_message('error', f"CLI: {e}", exc_info=True)
        sys.stderr.write(f"floer: error: {e}\n")
        return EXIT_USAGE
    except ArithmeticError as e:
        log_message('error', f"CLI: computation did not terminate as expected: {e}", exc_info=True)
        sys.stderr.write(f"floer: error: {e}\n")
        return EXIT_FAILURE

    if config.output_format == "json":
        text = render_json(envelope)
    _emit(text, config.out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
