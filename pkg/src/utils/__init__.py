"""
Utility Functions Package
"""

from src.utils.helpers import (
    dumps_report,
    format_cell,
    render_mapping,
    render_table,
)

__all__ = [
    "dumps_report",
    "format_cell",
    "render_mapping",
    "render_table",
]
