"""
Workbench Errors

Every failure raised by the library derives from ``WorkbenchError`` so the tools
layer can turn it into an error report.
"""

from typing import Optional


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class ConductorError(WorkbenchError, ValueError):
    """A cyclotomic conductor is invalid or does not divide the target."""


class CycDivisionByZero(WorkbenchError, ZeroDivisionError):
    """Inverse of the zero element of a cyclotomic field."""


class ClosureCapExceeded(WorkbenchError):
    """The generated group is not finite within the enumeration cap."""

    def __init__(self, cap: int):
        super().__init__(f"group is not finite within cap {cap}")
        self.cap = cap


class SingularMatrixError(WorkbenchError):
    """A matrix that must be invertible has zero determinant."""


class GroupShapeError(WorkbenchError):
    """The group does not have the shape an operation requires."""


class ParameterError(WorkbenchError, ValueError):
    """A numeric parameter lies outside the supported range."""


class MixedDimensionError(WorkbenchError):
    """The Hilbert route was asked for the degree of a non-equidimensional set."""


class EmptyVarietyError(WorkbenchError):
    """The variety is empty (unit ideal) or the ring has no variables."""


class InputFormatError(WorkbenchError):
    """A group or ideal file is malformed; ``field`` names the offending key."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.field = field
