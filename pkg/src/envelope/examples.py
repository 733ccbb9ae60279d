"""
Worked Examples

Small instances of the example families, each built as an explicit ideal in the
matrix-entry ring and measured with the Hilbert route:

- roots(m): the m-th roots of unity, one equation x^m - 1
- torus(k): {[[a, b], [0, a^k]]}, degree k; its envelope (upper triangular) has degree 1
- dihedral(m): 4m points diag(e^j, e^-j) and [[0, e^j], [e^-j, 0]], e of order 2m;
  its envelope (diagonal and antidiagonal planes) has degree 2
- permutation(n): permutation matrices times the diagonal torus, n! coordinate planes
- unipotent(n): {exp(sN)} for the principal nilpotent N, degree n - 1
"""

from dataclasses import dataclass, field
from math import factorial
from typing import Optional, Sequence

import structlog

from src.algebra.exactnum import ONE
from src.algebra.groebner import Ideal, eliminate, ideal_intersect, profile
from src.algebra.hilbert import VarietyProfile
from src.algebra.multipoly import GRLEX, Poly, evaluate, matrix_var_names, parse_poly
from src.bounds.formulas import unipotent_bound
from src.config import get_settings
from src.errors import ParameterError
from src.groups.catalog import dihedral_example_generators, permutation_patterns
from src.groups.matgroup import closure
from src.groups.matrices import CycMatrix

logger = structlog.get_logger(__name__)

EXAMPLE_NAMES = ("roots", "torus", "dihedral", "permutation", "unipotent")
DEFAULT_PARAMS = {"roots": 5, "torus": 3, "dihedral": 3, "permutation": 3, "unipotent": 3}


@dataclass
class ExampleOutcome:
    name: str
    param: int
    group: Optional[VarietyProfile] = None
    envelope: Optional[VarietyProfile] = None
    expected: dict[str, int] = field(default_factory=dict)

    def actual(self) -> dict[str, int]:
        actual = {}
        if self.group is not None:
            actual["group_dimension"] = self.group.dimension
            actual["group_degree"] = self.group.degree
        if self.envelope is not None:
            actual["envelope_dimension"] = self.envelope.dimension
            actual["envelope_degree"] = self.envelope.degree
        return actual

    @property
    def matches(self) -> bool:
        actual = self.actual()
        agree = all(actual[k] == v for k, v in self.expected.items() if k in actual)
        bound = self.expected.get("bound")
        return agree and (bound is None or self.group is None or self.group.degree <= bound)


def _check_param(value: int, low: int, cap: int, what: str) -> None:
    if not low <= value <= cap:
        raise ParameterError(f"{what} parameter must lie in [{low}, {cap}], got {value}")


def _ideal(texts: Sequence[str], names: Sequence[str]) -> Ideal:
    return Ideal(len(names), tuple(parse_poly(t, names) for t in texts), GRLEX)


# =============================================================================
# Families
# =============================================================================


def roots_of_unity_example(m: int) -> ExampleOutcome:
    _check_param(m, 1, get_settings().max_roots_param, "roots")
    ideal = _ideal([f"x^{m} - 1"], ["x"])
    return ExampleOutcome(
        "roots", m, group=profile(ideal), expected={"group_dimension": 0, "group_degree": m}
    )


def torus_example(k: int) -> ExampleOutcome:
    _check_param(k, 1, get_settings().max_torus_param, "torus")
    names = matrix_var_names(2)
    group = _ideal(["x21", f"x22 - x11^{k}"], names)
    envelope = _ideal(["x21"], names)
    return ExampleOutcome(
        "torus",
        k,
        group=profile(group),
        envelope=profile(envelope),
        expected={
            "group_dimension": 2,
            "group_degree": k,
            "envelope_dimension": 3,
            "envelope_degree": 1,
        },
    )


def dihedral_point_ideal(m: int) -> Ideal:
    """The 4m points of the dihedral example as an intersection of two components."""
    names = matrix_var_names(2)
    diagonal = _ideal(["x12", "x21", f"x11^{2 * m} - 1", f"x22 - x11^{2 * m - 1}"], names)
    antidiagonal = _ideal(["x11", "x22", f"x12^{2 * m} - 1", f"x21 - x12^{2 * m - 1}"], names)
    return ideal_intersect(diagonal, antidiagonal)


def diagonal_antidiagonal_ideal() -> Ideal:
    """Closure of the diagonal torus and the antidiagonal matrices."""
    names = matrix_var_names(2)
    return ideal_intersect(_ideal(["x12", "x21"], names), _ideal(["x11", "x22"], names))


def dihedral_example(m: int) -> ExampleOutcome:
    _check_param(m, 1, get_settings().max_dihedral_param, "dihedral")
    points = dihedral_point_ideal(m)
    envelope = diagonal_antidiagonal_ideal()
    if not check_envelope_membership(dihedral_example_generators(m), envelope):
        logger.warning("Dihedral group escapes its envelope", m=m)
    return ExampleOutcome(
        "dihedral",
        m,
        group=profile(points),
        envelope=profile(envelope),
        expected={
            "group_dimension": 0,
            "group_degree": 4 * m,
            "envelope_dimension": 2,
            "envelope_degree": 2,
        },
    )


def permutation_plane_ideal(n: int) -> Ideal:
    """Union of the n! coordinate planes {x_ij = 0 for j != p(i)}."""
    nvars = n * n
    planes = []
    for perm in permutation_patterns(n):
        gens = tuple(
            Poly.variable(nvars, i * n + j) for i in range(n) for j in range(n) if j != perm[i]
        )
        planes.append(Ideal(nvars, gens, GRLEX))
    result = planes[0]
    for plane in planes[1:]:
        result = ideal_intersect(result, plane)
    return result


def permutation_example(n: int) -> ExampleOutcome:
    _check_param(n, 1, get_settings().max_permutation_param, "permutation")
    return ExampleOutcome(
        "permutation",
        n,
        group=profile(permutation_plane_ideal(n)),
        expected={"group_dimension": n, "group_degree": factorial(n)},
    )


def unipotent_exp_ideal(n: int) -> Ideal:
    """Eliminate s from x_ij = s^(j-i)/(j-i)! (upper), x_ij = 0 (lower)."""
    nvars = n * n + 1
    gens = []
    for i in range(n):
        for j in range(n):
            x = Poly.variable(nvars, 1 + i * n + j)
            if j < i:
                gens.append(x)
                continue
            k = j - i
            power = (k,) + (0,) * (nvars - 1)
            gens.append(x - Poly.monomial(power, ONE / factorial(k)))
    return eliminate(Ideal(nvars, tuple(gens), GRLEX), 1)


def unipotent_example(n: int) -> ExampleOutcome:
    _check_param(n, 2, get_settings().max_unipotent_param, "unipotent")
    return ExampleOutcome(
        "unipotent",
        n,
        group=profile(unipotent_exp_ideal(n)),
        expected={"group_dimension": 1, "group_degree": n - 1, "bound": unipotent_bound(n)},
    )


RUNNERS = {
    "roots": roots_of_unity_example,
    "torus": torus_example,
    "dihedral": dihedral_example,
    "permutation": permutation_example,
    "unipotent": unipotent_example,
}


def run_example(name: str, param: Optional[int] = None) -> ExampleOutcome:
    if name not in RUNNERS:
        raise ParameterError(f"unknown example {name!r}; choose from {', '.join(EXAMPLE_NAMES)}")
    outcome = RUNNERS[name](DEFAULT_PARAMS[name] if param is None else param)
    logger.info(
        "Example measured",
        example=name,
        param=outcome.param,
        group=outcome.group.as_dict() if outcome.group else None,
        envelope=outcome.envelope.as_dict() if outcome.envelope else None,
    )
    return outcome


def example_degrees(params: Optional[dict[str, int]] = None) -> list[ExampleOutcome]:
    """Every example family at its default (or given) parameter."""
    params = params or {}
    return [run_example(name, params.get(name)) for name in EXAMPLE_NAMES]


# =============================================================================
# Envelope containment
# =============================================================================


def check_envelope_membership(
    generators: Sequence[CycMatrix], envelope: Ideal, cap: Optional[int] = None
) -> bool:
    """
    Every element of the group generated by ``generators`` is a zero of ``envelope``.

    Raises:
        ClosureCapExceeded: the generated group is not finite within ``cap``
    """
    group = closure(generators, cap=cap)
    return all(
        evaluate(g, m.flat()).is_zero() for m in group.elements for g in envelope.generators
    )
