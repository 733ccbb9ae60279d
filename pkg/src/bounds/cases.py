"""
GL3 Case Constants

The per-case degree bounds of the GL3 argument, each composed from the formula
evaluators rather than written down.
"""

from dataclasses import dataclass
from math import factorial

import structlog

from src.bounds.formulas import (
    headline_bound,
    normalizer_bound,
    product_bound,
    product_bound_precise,
    unipotent_bound,
)
from src.envelope.classification import CLASSIFICATION_ROWS

logger = structlog.get_logger(__name__)

# |Gamma| / |Gamma ∩ Z3| for the primitive finite subgroups of SL3
FINITE_PRIMITIVE_BOUND = 360


@dataclass(frozen=True)
class CaseBound:
    case: str
    expression: str
    value: int

    def as_dict(self) -> dict:
        return {"case": self.case, "expression": self.expression, "value": self.value}


def gl2_normalizer_bound() -> int:
    """Largest 3^(dim H - 1) * deg H over the GL2 classification rows."""
    return max(normalizer_bound(3, row.dimension, 1, row.max_degree) for row in CLASSIFICATION_ROWS)


def gl3_case_bounds() -> list[CaseBound]:
    diagonal = normalizer_bound(3, 3, 1, 1)
    unipotent = unipotent_bound(3)
    gl2_part = gl2_normalizer_bound()
    return [
        CaseBound(
            "diagonalizable",
            f"{diagonal} * {unipotent} * 8",
            product_bound(diagonal, unipotent, 3),
        ),
        CaseBound(
            "two blocks (2, 1)",
            f"4 * {gl2_part} * 1",
            product_bound_precise(gl2_part, 1, (2, 1)),
        ),
        CaseBound("irreducible semisimple", "3^5", normalizer_bound(3, 9, 4, 1)),
        CaseBound("finite primitive", "|Gamma| / |Gamma ∩ Z3|", FINITE_PRIMITIVE_BOUND),
        CaseBound("monomial", "3!", factorial(3)),
    ]


def gl3_bound() -> int:
    """Maximum over the GL3 cases; equals ``headline_bound(3)``."""
    value = max(case.value for case in gl3_case_bounds())
    if value != headline_bound(3):
        logger.warning("GL3 bound disagrees with the headline", value=value)
    return value
