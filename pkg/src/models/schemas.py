"""
Pydantic Schemas for input files and reports.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.config import ConeStrategy, OrderName


def first_error_field(exc: ValidationError) -> Optional[str]:
    """Dotted location of the first offending value."""
    errors = exc.errors()
    if not errors:
        return None
    return ".".join(str(part) for part in errors[0]["loc"]) or None


# ============================================================================
# Input Files
# ============================================================================


class GroupFile(BaseModel):
    """Group file: generators as n x n arrays of lowest-first coefficient lists."""

    model_config = ConfigDict(extra="forbid")

    n: int = Field(..., ge=1, le=4)
    conductor: int = Field(default=1, ge=1)
    generators: list[list[list[list[str]]]] = Field(..., min_length=1)

    @field_validator("generators", mode="before")
    @classmethod
    def stringify_coefficients(cls, value):
        """Accept bare integers as coefficients."""
        def walk(node):
            if isinstance(node, list):
                return [walk(v) for v in node]
            if isinstance(node, bool):
                raise ValueError("booleans are not coefficients")
            return str(node) if isinstance(node, int) else node

        return walk(value)


class IdealFile(BaseModel):
    """Ideal file: variable names, conductor, order and polynomial strings."""

    model_config = ConfigDict(extra="forbid")

    vars: list[str] = Field(..., min_length=1, max_length=16)
    conductor: int = Field(default=1, ge=1)
    order: OrderName = OrderName.GRLEX
    generators: list[str] = Field(default_factory=list)

    @field_validator("vars")
    @classmethod
    def distinct_names(cls, value: list[str]) -> list[str]:
        if len(set(value)) != len(value):
            raise ValueError("variable names must be distinct")
        for name in value:
            if not name.isidentifier():
                raise ValueError(f"invalid variable name {name!r}")
            if name == "z":
                raise ValueError("'z' is reserved for the root of unity")
        return value


# ============================================================================
# Reports
# ============================================================================


class VarietyProfileReport(BaseModel):
    dimension: int = Field(..., ge=0)
    degree: int = Field(..., ge=1)


class Algorithm1Report(BaseModel):
    """Outcome of the truncated-basis degree search."""

    group: str
    order_of_group: int = Field(..., ge=1)
    num_lines: int = Field(..., ge=1)
    gb_max_degree: int = Field(..., ge=1)
    gb_size: int = Field(..., ge=1)
    d: int = Field(..., ge=1)
    degree: int = Field(..., ge=1)
    dimension: int = Field(..., ge=0)
    order: OrderName
    strategy: ConeStrategy
    certificates: dict[str, int] = Field(default_factory=dict)


class BoundReport(BaseModel):
    """Bound formulas evaluated at one n; big integers are exact."""

    n: int = Field(..., ge=1)
    schur_J: int
    schur_J_integral: bool
    A_exact: Optional[int] = None
    A_upper: int
    unipotent: int
    reductive: Optional[int] = None
    component: Optional[int] = None
    product_factor: int
    tight: Optional[int] = None
    headline: int
    lower_bound_factorial: int
    findings: list[str] = Field(default_factory=list)


class ExampleReport(BaseModel):
    """Degree report for one worked example."""

    name: str
    param: Optional[int] = None
    group: Optional[VarietyProfileReport] = None
    envelope: Optional[VarietyProfileReport] = None
    expected: dict[str, int] = Field(default_factory=dict)
    matches: bool = True


class VerifyCaseResult(BaseModel):
    """One row of the acceptance suite."""

    case: str
    expected: str
    actual: str
    passed: bool
