"""
Bound Tools

Report-producing wrappers around the degree bound formulas.
"""

from typing import Optional

import structlog

from src.bounds.cases import gl3_bound, gl3_case_bounds
from src.bounds.formulas import bound_summary, headline_bound
from src.config import get_settings
from src.errors import ParameterError, WorkbenchError
from src.models.schemas import BoundReport
from src.tools.errors import error_report

logger = structlog.get_logger(__name__)


def _check_n(n: int) -> None:
    cap = get_settings().max_bounds_n
    if not 1 <= n <= cap:
        raise ParameterError(f"n must lie in [1, {cap}], got {n}")


def get_bound_report(n: int) -> dict:
    """
    Evaluate every bound formula at one matrix size.

    Args:
        n: Matrix size

    Returns:
        BoundReport as a dict, or an error report
    """
    try:
        _check_n(n)
        summary = bound_summary(n)
    except WorkbenchError as exc:
        return error_report(exc)
    return BoundReport(**summary.as_dict()).model_dump()


def get_bound_table(n: int, to: Optional[int] = None) -> dict:
    """
    Bound reports for every matrix size from ``n`` to ``to``.

    Returns:
        Dictionary with the reports and the findings of all rows combined
    """
    to = n if to is None else to
    if to < n:
        return error_report(ParameterError(f"--to ({to}) is below --n ({n})"), field="to")
    reports = []
    for k in range(n, to + 1):
        report = get_bound_report(k)
        if "error" in report:
            return report
        reports.append(report)
    findings = [f"n={r['n']}: {f}" for r in reports for f in r["findings"]]
    logger.info("Bound table evaluated", first=n, last=to, findings=len(findings))
    return {"reports": reports, "findings": findings}


def get_gl3_cases() -> dict:
    """Per-case GL3 constants and their maximum against the headline bound."""
    cases = [case.as_dict() for case in gl3_case_bounds()]
    maximum = gl3_bound()
    return {
        "cases": cases,
        "maximum": maximum,
        "headline": headline_bound(3),
        "matches": maximum == headline_bound(3),
    }
