"""
Report Tools Package
"""

from src.tools.bound_tools import (
    get_bound_report,
    get_bound_table,
    get_gl3_cases,
)

from src.tools.envelope_tools import (
    compute_degree,
    get_gl2_table,
    load_json_file,
    run_algorithm1,
    run_examples,
)

from src.tools.verify_tools import (
    CASES,
    run_case,
    run_verify,
)

from src.tools.errors import error_report, is_error

__all__ = [
    # Bound tools
    "get_bound_report",
    "get_bound_table",
    "get_gl3_cases",
    # Envelope tools
    "compute_degree",
    "get_gl2_table",
    "load_json_file",
    "run_algorithm1",
    "run_examples",
    # Verify tools
    "CASES",
    "run_case",
    "run_verify",
    # Errors
    "error_report",
    "is_error",
]
