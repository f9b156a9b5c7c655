"""Verification reports: JSON serialization and csv/markdown tables."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from tnv import __version__

SCHEMA_VERSION = 1
COLUMNS = ("inputs", "computed", "expected", "residual", "pass")


def to_plain(value: Any):
    """JSON-ready copy: Fractions become "num/den" (or ints), tuples become lists."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_plain(v) for v in value]
        return sorted(items, key=json.dumps) if isinstance(value, (set, frozenset)) else items
    if hasattr(value, "item"):  # numpy scalars
        return to_plain(value.item())
    return str(value)


def _magnitude(residual) -> float:
    if residual is None:
        return 0.0
    return abs(float(residual))


@dataclass
class VerificationReport:
    suite: str
    seed: int = 0
    cases: list[dict] = field(default_factory=list)
    partial: bool = False

    def add(self, inputs: dict, computed, expected, residual, tolerance: float = 0.0, passed: bool | None = None):
        """Record one case; pass defaults to |residual| <= tolerance."""
        mag = _magnitude(residual)
        ok = mag <= tolerance if passed is None else bool(passed)
        self.cases.append(
            {
                "inputs": to_plain(inputs),
                "computed": to_plain(computed),
                "expected": to_plain(expected),
                "residual": to_plain(residual),
                "tolerance": tolerance,
                "pass": ok,
            }
        )
        return ok

    def sorted_cases(self) -> list[dict]:
        return sorted(self.cases, key=lambda c: json.dumps(c["inputs"], sort_keys=True))

    @property
    def summary(self) -> dict:
        return {
            "total": len(self.cases),
            "passed": sum(c["pass"] for c in self.cases),
            "maxResidual": max((_magnitude(_parse(c["residual"])) for c in self.cases), default=0.0),
        }

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.cases)

    def as_dict(self) -> dict:
        out = {
            "schemaVersion": SCHEMA_VERSION,
            "suite": self.suite,
            "cases": self.sorted_cases(),
            "summary": self.summary,
            "seed": self.seed,
            "toolVersion": __version__,
        }
        if self.partial:
            out["partial"] = True
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"


def _parse(value):
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError:
            return float(value)
    return value


def _cell(value) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def emit_table(report: VerificationReport, fmt: str) -> str:
    """Render the cases as csv or a markdown table, one row per case."""
    rows = [[_cell(c[col]) for col in COLUMNS] for c in report.sorted_cases()]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(COLUMNS) + " |", "|" + "---|" * len(COLUMNS)]
        for row in rows:
            lines.append("| " + " | ".join(cell.replace("|", "\\|") for cell in row) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table format {fmt!r}")
