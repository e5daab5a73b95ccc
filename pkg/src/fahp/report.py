"""Rendering of ranked reports as aligned text, CSV, or JSON."""

from __future__ import annotations

import csv
import io
import json

from .hierarchy import RankedReport, rank_report

COLUMNS = [
    "Category", "Category Weight", "Guideline", "Local Weight",
    "Local Rank", "Global Weight", "Global Rank",
]


def _category_weights(report: RankedReport) -> dict[str, float]:
    return {row.id: row.weight for row in report.nodes}


def _rows(report: RankedReport, top: int | None):
    cat_w = _category_weights(report)
    for leaf in rank_report(report, top=top):
        yield {
            "category": leaf.category,
            "category_label": leaf.category_label,
            "category_weight": cat_w.get(leaf.category),
            "id": leaf.id,
            "label": leaf.label,
            "local_weight": leaf.local_weight,
            "local_rank": leaf.local_rank,
            "global_weight": leaf.global_weight,
            "global_rank": leaf.global_rank,
        }


def _fmt6(x) -> str:
    return "" if x is None else f"{x:.6f}"


def render_report(
    report: RankedReport,
    format: str = "table",
    top: int | None = None,
    meta: bool = True,
) -> str:
    """Deterministic text rendering of a ranked report.

    The table format prints weights to 6 decimals; csv and json carry
    full precision so they re-parse to the exact computed values.
    """
    if format == "json":
        doc = report.to_dict()
        if top:
            doc["leaves"] = doc["leaves"][:top]
        if not meta:
            doc.pop("goal", None)
            doc.pop("method", None)
        return json.dumps(doc, indent=2)

    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if meta:
            buf.write(f"# goal: {report.goal}; method: {report.method}\n")
        writer.writerow([
            "category", "category_weight", "guideline", "local_weight",
            "local_rank", "global_weight", "global_rank",
        ])
        for r in _rows(report, top):
            writer.writerow([
                r["category"],
                repr(r["category_weight"]) if r["category_weight"] is not None else "",
                r["id"],
                repr(r["local_weight"]),
                r["local_rank"],
                repr(r["global_weight"]),
                r["global_rank"],
            ])
        return buf.getvalue()

    if format == "table":
        rows = [
            [
                f"{r['category']} ({r['category_label']})" if r["category_label"]
                and r["category_label"] != r["category"] else r["category"],
                _fmt6(r["category_weight"]),
                r["id"],
                _fmt6(r["local_weight"]),
                str(r["local_rank"]),
                _fmt6(r["global_weight"]),
                str(r["global_rank"]),
            ]
            for r in _rows(report, top)
        ]
        widths = [
            max(len(COLUMNS[i]), *(len(row[i]) for row in rows)) if rows
            else len(COLUMNS[i])
            for i in range(len(COLUMNS))
        ]
        lines = []
        if meta:
            lines.append(f"# goal: {report.goal}; method: {report.method}")
        lines.append(" | ".join(c.ljust(w) for c, w in zip(COLUMNS, widths)))
        lines.append("-+-".join("-" * w for w in widths))
        for row in rows:
            lines.append(" | ".join(c.ljust(w) for c, w in zip(row, widths)))
        return "\n".join(lines) + "\n"

    raise ValueError(f"unknown format {format!r}")


def parse_report_csv(text: str) -> list[dict]:
    """Re-parse a csv rendering; weights come back as exact floats."""
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    reader = csv.DictReader(lines)
    out = []
    for row in reader:
        out.append({
            "category": row["category"],
            "category_weight": float(row["category_weight"]) if row["category_weight"] else None,
            "id": row["guideline"],
            "local_weight": float(row["local_weight"]),
            "local_rank": int(row["local_rank"]),
            "global_weight": float(row["global_weight"]),
            "global_rank": int(row["global_rank"]),
        })
    return out
