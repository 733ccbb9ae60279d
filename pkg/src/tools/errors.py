"""
Error Reports

Turns library exceptions into the ``{"error": ..., "field": ...}`` dicts the tools
return.
"""

from typing import Optional

import structlog

from src.errors import InputFormatError, WorkbenchError

logger = structlog.get_logger(__name__)


def error_report(exc: WorkbenchError, field: Optional[str] = None) -> dict:
    if field is None and isinstance(exc, InputFormatError):
        field = exc.field
    logger.error("Computation failed", error=str(exc), kind=type(exc).__name__, field=field)
    return {"error": str(exc), "kind": type(exc).__name__, "field": field}


def is_error(report: dict) -> bool:
    return "error" in report
