"""
GL2 Envelope Table

The non-finite envelope candidates in GL2, each measured from its ideal, and the
five (dimension, degree) rows every envelope of a subgroup of GL2 falls into.
"""

from dataclasses import dataclass
from typing import Optional

import structlog

from src.algebra.groebner import Ideal, profile
from src.algebra.hilbert import VarietyProfile
from src.algebra.multipoly import GRLEX, matrix_var_names, parse_poly
from src.bounds.formulas import headline_bound
from src.envelope.algorithm import algorithm1
from src.envelope.examples import diagonal_antidiagonal_ideal
from src.groups.catalog import SL2_CATALOG, named_group

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class EnvelopeRow:
    name: str
    description: str
    profile: VarietyProfile
    bounded_by: int

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "dimension": self.profile.dimension,
            "degree": self.profile.degree,
            "bounded_by": self.bounded_by,
        }


@dataclass(frozen=True)
class ClassificationRow:
    label: str
    dimension: int
    min_degree: int
    max_degree: int

    def accepts(self, degree: int) -> bool:
        return self.min_degree <= degree <= self.max_degree


CLASSIFICATION_ROWS = (
    ClassificationRow("dim H = 4 and deg H = 1", 4, 1, 1),
    ClassificationRow("dim H = 3 and deg H = 1", 3, 1, 1),
    ClassificationRow("dim H = 2 and deg H = 2", 2, 2, 2),
    ClassificationRow("dim H = 2 and deg H = 1", 2, 1, 1),
    ClassificationRow("dim H = 1 and deg H <= 60", 1, 1, 60),
)


def classify_gl2_profile(dimension: int, degree: int) -> Optional[str]:
    """Label of the classification row a (dimension, degree) pair falls in, if any."""
    for row in CLASSIFICATION_ROWS:
        if row.dimension == dimension and row.accepts(degree):
            return row.label
    return None


def _bounded_by(ideal: Ideal) -> int:
    """Largest degree in the reduced basis; 0 when no equation is needed."""
    return max((g.degree() for g in ideal.groebner()), default=0)


def gl2_envelope_table() -> list[EnvelopeRow]:
    """GL2 itself, upper triangular B, diagonal-antidiagonal D and its identity part."""
    names = matrix_var_names(2)
    candidates = [
        ("GL2", "all invertible matrices", Ideal(4, (), GRLEX)),
        ("B", "upper triangular", Ideal(4, (parse_poly("x21", names),), GRLEX)),
        ("D", "diagonal and antidiagonal", diagonal_antidiagonal_ideal()),
        (
            "D0",
            "diagonal",
            Ideal(4, (parse_poly("x12", names), parse_poly("x21", names)), GRLEX),
        ),
    ]
    rows = [
        EnvelopeRow(name, description, profile(ideal), _bounded_by(ideal))
        for name, description, ideal in candidates
    ]
    for row in rows:
        logger.debug("Envelope row", **row.as_dict())
    return rows


def gl2_combined_bound(finite_bounds: Optional[dict[str, int]] = None) -> int:
    """
    Largest degree bound over the GL2 table and the three exceptional finite groups.

    Args:
        finite_bounds: Precomputed bounds per catalog tag; missing ones are computed

    Returns:
        The bound, which agrees with ``headline_bound(2)``
    """
    finite_bounds = dict(finite_bounds or {})
    for tag in SL2_CATALOG:
        if tag not in finite_bounds:
            finite_bounds[tag] = algorithm1(named_group(tag)).d
    value = max([row.bounded_by for row in gl2_envelope_table()] + list(finite_bounds.values()))
    if value != headline_bound(2):
        logger.warning(
            "GL2 bound disagrees with the headline", value=value, headline=headline_bound(2)
        )
    return value
