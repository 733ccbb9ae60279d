"""
Input and Report Models Package
"""

from src.models.schemas import (
    Algorithm1Report,
    BoundReport,
    ExampleReport,
    GroupFile,
    IdealFile,
    VarietyProfileReport,
    VerifyCaseResult,
    first_error_field,
)

__all__ = [
    # Input files
    "GroupFile",
    "IdealFile",
    "first_error_field",
    # Reports
    "Algorithm1Report",
    "BoundReport",
    "ExampleReport",
    "VarietyProfileReport",
    "VerifyCaseResult",
]
