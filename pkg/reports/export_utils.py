# floer-ring/reports/export_utils.py

import json
from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
from jsonschema import SchemaError, ValidationError, validate

from algebra.polyalg import Monomial, PoincarePoly, Polynomial
from utils.logging_utils import log_message

SAFE_INTEGER = 2 ** 53

TABLE_TITLES = {
    "framed": "Mod 4 graded betti numbers for I^#(Σ×S¹)_w",
    "critical": "Mod 4 graded betti numbers for H_*(N₀^g ⊔ N₀^g)",
}
ROW_LABELS = {
    "framed": ("b_{0+ε} = b_{1+ε}", "b_{2+ε} = b_{3+ε}"),
    "critical": ("n_{0+ε} = n_{1+ε}", "n_{2+ε} = n_{3+ε}"),
}

ENVELOPE_SCHEMA = {
    "type": "object",
    "required": ["version", "command", "config", "results", "summary", "timings"],
    "properties": {
        "version": {"type": "string"},
        "command": {"enum": ["nilpotency", "table", "groebner", "verify"]},
        "config": {"type": "object"},
        "results": {"type": "array", "items": {"type": "object"}},
        "summary": {
            "type": "object",
            "required": ["passed"],
            "properties": {"passed": {"type": "boolean"}},
        },
        "timings": {"type": "object", "additionalProperties": {"type": "number"}},
    },
    "additionalProperties": False,
}


# --- Serialization ---
def to_jsonable(value: Any) -> Any:
    """
    Converts computation results into JSON-safe values.

    Integers beyond ±2^53 become decimal strings, Fractions become "p/q",
    PoincarePoly becomes its four coefficients and polynomials their text form.
    """
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > SAFE_INTEGER else value
    if isinstance(value, Fraction):
        return to_jsonable(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, PoincarePoly):
        return [to_jsonable(c) for c in value.coeffs]
    if isinstance(value, Monomial):
        return value.to_string(ascii_names=True)
    if isinstance(value, Polynomial):
        return value.to_string(ascii_names=True)
    if is_dataclass(value):
        return {item.name: to_jsonable(getattr(value, item.name)) for item in fields(value)}
    if isinstance(value, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [to_jsonable(v) for v in items]
    raise TypeError(f"Cannot serialize value of type {type(value).__name__}")


def genus_report_payload(report) -> Dict[str, Any]:
    """GenusReport fields plus the presentation rows and the agreement flag."""
    payload = to_jsonable(report)
    payload["agreement"] = report.agreement
    payload["framed_row"] = list(report.framed_betti.relabel(report.epsilon))
    payload["critical_row"] = list(report.critical_betti.relabel(report.epsilon))
    return payload


def build_envelope(version: str, command: str, config: Dict[str, Any], results: Sequence[Any],
                   summary: Dict[str, Any], timings: Optional[Dict[str, float]] = None) -> Dict[str, Any]:
    return {
        "version": version,
        "command": command,
        "config": to_jsonable(config),
        "results": [to_jsonable(r) for r in results],
        "summary": to_jsonable(summary),
        "timings": dict(timings or {}),
    }


def validate_envelope(envelope: Dict[str, Any]) -> bool:
    """
    Validates a result envelope against ENVELOPE_SCHEMA.

    Returns:
        bool: True if valid.

    Raises:
        ValueError: If the envelope does not conform.
    """
    try:
        validate(instance=envelope, schema=ENVELOPE_SCHEMA)
    except (ValidationError, SchemaError) as e:
        log_message('error', f"Export_Utils: Envelope failed validation: {e.message}")
        raise ValueError(f"Malformed result envelope: {e.message}") from e
    return True


def render_json(envelope: Dict[str, Any]) -> str:
    validate_envelope(envelope)
    return json.dumps(envelope, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# --- Tables ---
def render_table_text(which: str, rows: Dict[int, Sequence[int]]) -> str:
    """
    Lays out betti rows with genera as columns, the way the published tables read.

    Args:
        which (str): 'framed' or 'critical'.
        rows (Dict[int, Sequence[int]]): genus -> four coefficients in ε-shifted labels.

    Returns:
        str: The table, newline terminated.
    """
    if which not in TABLE_TITLES:
        raise ValueError(f"Unknown table '{which}'. Expected one of {sorted(TABLE_TITLES)}.")
    genera = sorted(rows)
    low_label, high_label = ROW_LABELS[which]
    lines = [
        ("g", [str(g) for g in genera]),
        (low_label, [str(rows[g][0]) for g in genera]),
        (high_label, [str(rows[g][2]) for g in genera]),
        ("Total rank", [str(sum(rows[g])) for g in genera]),
    ]
    label_width = max(len(label) for label, _ in lines)
    widths = [max(len(cells[i]) for _, cells in lines) for i in range(len(genera))]
    out = [TABLE_TITLES[which]]
    for label, cells in lines:
        out.append(label.ljust(label_width) + "".join("  " + cell.rjust(w) for cell, w in zip(cells, widths)))
    return "\n".join(out) + "\n"


def table_to_csv(which: str, reports: Sequence[Any]) -> str:
    """One row per (genus, grading); framed tables also carry the sign split."""
    records = []
    for report in reports:
        values = report.framed_betti if which == "framed" else report.critical_betti
        for grading in range(4):
            record = {
                "genus": report.genus,
                "epsilon": report.epsilon,
                "grading": grading,
                "shifted_label": (grading - report.epsilon) % 4,
                "betti": values[grading],
            }
            if which == "framed":
                record["betti_plus"] = report.framed_betti_plus[grading]
                record["betti_minus"] = report.framed_betti_minus[grading]
            records.append(record)
    log_message('info', f"Export_Utils: Exporting {len(records)} {which} rows to CSV.")
    return pd.DataFrame(records).to_csv(index=False)


# --- Gröbner data ---
def render_groebner_text(info: Dict[str, Any]) -> str:
    lines = [
        f"Ideal {info['family']}_{info['genus']} in {info['ring']}",
        "Reduced Groebner basis (lex, α > β > γ):",
    ]
    lines += [f"  {g}" for g in info["basis"]]
    lines.append("Initial ideal: (" + ", ".join(info["initial_ideal"]) + ")")
    standard = info["standard_monomials"]
    lines.append(f"Standard monomials ({len(standard)}): " + ", ".join(standard))
    lines.append(f"Degree: {info['degree']}")
    lines.append(f"Graded Poincaré polynomial (mod 4): {info['poincare']}")
    return "\n".join(lines) + "\n"


def render_nilpotency_text(results: List[Dict[str, Any]]) -> str:
    lines = ["genus  computed  expected  match"]
    for row in results:
        lines.append(f"{row['genus']:>5}  {row['computed']:>8}  {row['expected']:>8}  {'yes' if row['match'] else 'NO'}")
    return "\n".join(lines) + "\n"


# --- Verification summary ---
def generate_markdown_verify_report(reports: Sequence[Dict[str, Any]], config: Dict[str, Any]) -> str:
    """
    Summarizes a verification run in Markdown, one line per check.

    Args:
        reports: CheckReport dictionaries (name, passed, cases, failures).
        config: The resolved run configuration.

    Returns:
        str: The report content.
    """
    log_message('info', "Export_Utils: Generating Markdown verification report.")
    passed = all(r["passed"] for r in reports)
    report_md = "# Floer Ring Verification Report\n\n"
    report_md += f"**Overall Status:** **{'PASS' if passed else 'FAIL'}**\n"
    report_md += f"**Seed:** {config.get('seed', 0)}\n"
    report_md += f"**Checks:** {len(reports)}, **Cases:** {sum(len(r['cases']) for r in reports)}\n\n"

    report_md += "## Checks\n\n"
    for r in reports:
        report_md += f"- {'✅' if r['passed'] else '❌'} `{r['name']}` ({len(r['cases'])} cases)\n"
    report_md += "\n"

    failing = [r for r in reports if not r["passed"]]
    if failing:
        report_md += "## 🛑 Failures\n\n"
        for r in failing:
            report_md += f"**`{r['name']}`:**\n"
            for case in r["failures"]:
                report_md += f"- {case}\n"
            report_md += "\n"
    else:
        report_md += "### ✅ No Failures Detected\n"
    return report_md
