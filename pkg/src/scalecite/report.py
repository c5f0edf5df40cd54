"""Render row dictionaries as aligned text, CSV or JSON."""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .sbci import SbciParams
from .tuner import ObjectiveBreakdown

OUTPUT_FORMATS = ("text", "csv", "json")


def _cell(value, digits: int) -> str:
    if isinstance(value, float):
        return f"{value:.{digits}f}"
    return "" if value is None else str(value)


def format_text(rows: Sequence[dict], columns: Sequence[str] | None = None, digits: int = 2) -> str:
    if not rows:
        return "(no rows)\n"
    columns = list(columns or rows[0].keys())
    cells = [[_cell(r.get(c), digits) for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(columns)]
    # text columns left-aligned, numbers right-aligned
    numeric = [all(isinstance(r.get(c), (int, float)) for r in rows) for c in columns]

    def line(values):
        return "  ".join(v.rjust(w) if num else v.ljust(w) for v, w, num in zip(values, widths, numeric)).rstrip()

    out = [line(columns), "  ".join("-" * w for w in widths)]
    out.extend(line(row) for row in cells)
    return "\n".join(out) + "\n"


def format_csv(rows: Sequence[dict], columns: Sequence[str] | None = None) -> str:
    buf = io.StringIO()
    if rows or columns:
        columns = list(columns or rows[0].keys())
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for r in rows:
            writer.writerow([repr(v) if isinstance(v, float) else ("" if v is None else v) for v in (r.get(c) for c in columns)])
    return buf.getvalue()


def format_json(rows: Sequence[dict]) -> str:
    return json.dumps(list(rows), indent=2, ensure_ascii=False) + "\n"


def render(rows: Sequence[dict], fmt: str = "text", columns: Sequence[str] | None = None, digits: int = 2) -> str:
    if fmt == "text":
        return format_text(rows, columns, digits)
    if fmt == "csv":
        return format_csv(rows, columns)
    if fmt == "json":
        if columns:
            rows = [{c: r.get(c) for c in columns} for r in rows]
        return format_json(rows)
    raise ValueError(f"unknown output format {fmt!r}")


def tuning_rows(table: Sequence[tuple[SbciParams, ObjectiveBreakdown]]) -> list[dict]:
    """Grid-search table in the alpha / f / g / objective layout, plus components."""
    return [
        {
            "alpha": p.alpha,
            "f": p.penalty.label,
            "g": p.norm.label,
            "discriminative": b.discriminative,
            "mean_balance": b.mean_balance,
            "variance_balance": b.variance_balance,
            "stability": b.stability,
            "objective": b.total,
        }
        for p, b in table
    ]
