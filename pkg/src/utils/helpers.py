"""
Helper Utility Functions
"""

import json
from typing import Any, Iterable, Optional, Sequence


def dumps_report(report: Any) -> str:
    """
    Serialize a report as canonical JSON.

    Args:
        report: JSON-ready dict or list; big integers stay exact

    Returns:
        Indented JSON with sorted keys, identical for identical input
    """
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)


def format_cell(value: Any) -> str:
    """Render a table cell: None as '-', booleans as yes/no, lists joined."""
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return "; ".join(format_cell(v) for v in value) or "-"
    if isinstance(value, dict):
        return ", ".join(f"{k}={format_cell(v)}" for k, v in sorted(value.items())) or "-"
    return str(value)


def render_table(rows: Sequence[dict], columns: Optional[Iterable[str]] = None) -> str:
    """
    Render dict rows as an aligned text table.

    Args:
        rows: One dict per row
        columns: Column order; defaults to the keys of the first row

    Returns:
        Table text with a header and a separator line
    """
    if not rows:
        return "(no rows)"
    columns = list(columns) if columns is not None else list(rows[0])
    cells = [[format_cell(row.get(c)) for c in columns] for row in rows]
    widths = [max(len(c), *(len(line[i]) for line in cells)) for i, c in enumerate(columns)]
    header = "  ".join(c.ljust(w) for c, w in zip(columns, widths))
    rule = "  ".join("-" * w for w in widths)
    body = ["  ".join(v.ljust(w) for v, w in zip(line, widths)).rstrip() for line in cells]
    return "\n".join([header.rstrip(), rule, *body])


def render_mapping(report: dict) -> str:
    """Render a flat report as ``key: value`` lines in sorted key order."""
    width = max((len(k) for k in report), default=0)
    return "\n".join(f"{k.ljust(width)}  {format_cell(v)}" for k, v in sorted(report.items()))
