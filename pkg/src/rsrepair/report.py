"""Table assembly and md/csv/json emitters for the CLI."""

from __future__ import annotations

import csv
import io
import json

from .bounds import DEFAULT_BUDGET, bounds_report
from .list_decode import best_gs_params

BOUNDS_COLUMNS = ["k", "Exact", "Degree bound", "Lifted decoding bound",
                  "Character sum bound", "GS e", "GS mu"]


def gs_for(report, mu_max: int = 1000):
    if report.d_star is None:
        return None
    return best_gs_params(report.n, report.delta, report.d_star, mu_max)


def bounds_rows(p: int, m: int, t: int, ks, exact: bool = False,
                budget: int = DEFAULT_BUDGET, mu_max: int = 1000) -> list[dict]:
    """One record per k: the serialized bounds report plus the GS pair."""
    rows = []
    for k in ks:
        report = bounds_report(p, m, t, k, want_exact=exact, budget=budget)
        gs = gs_for(report, mu_max)
        row = report.to_dict()
        row["gs_e"] = gs.e_capped if gs else None
        row["gs_mu"] = gs.mu if gs else None
        rows.append(row)
    return rows


def bounds_table(rows: list[dict], exact: bool) -> list[dict]:
    """Rows keyed by the printed column names; correctable-error counts."""
    out = []
    for r in rows:
        cells = {
            "k": r["k"],
            "Exact": r["e_exact"],
            "Degree bound": r["e1"],
            "Lifted decoding bound": r["e2"],
            "Character sum bound": r["e3"],
            "GS e": r["gs_e"],
            "GS mu": r["gs_mu"],
        }
        if not exact:
            del cells["Exact"]
        out.append(cells)
    return out


def _cell(v) -> str:
    return "-" if v is None else str(v)


def render(rows: list[dict], fmt: str, columns: list[str] | None = None,
           payload=None) -> str:
    """Render rows as a markdown table, CSV, or JSON.

    ``payload`` overrides what is serialized for JSON (defaults to ``rows``).
    """
    if fmt == "json":
        return json.dumps(rows if payload is None else payload, indent=2, sort_keys=True) + "\n"
    if columns is None:
        columns = list(rows[0]) if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for r in rows:
            writer.writerow([_cell(r.get(c)) for c in columns])
        return buf.getvalue()
    if fmt == "md":
        lines = ["| " + " | ".join(columns) + " |",
                 "|" + "|".join("---" for _ in columns) + "|"]
        for r in rows:
            lines.append("| " + " | ".join(_cell(r.get(c)) for c in columns) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
