"""
Cone Ideals

Vanishing ideal of the scalar cone over a finite matrix group: the union of the
lines through the origin spanned by the group elements, in the ring of matrix
entries x11, ..., xnn.

Two constructions:
- intersection: fold ``ideal_intersect`` over the linear ideals of the lines
- interpolation: degree by degree, kernels of the evaluation map at one point per line
"""

from dataclasses import dataclass
from typing import Optional, Sequence

import structlog

from src.algebra.exactnum import CycNum
from src.algebra.groebner import Ideal, ideal_equal, ideal_intersect, profile
from src.algebra.hilbert import VarietyProfile
from src.algebra.linalg import kernel
from src.algebra.multipoly import (
    Monomial,
    MonomialOrder,
    Poly,
    evaluate,
    monomial_divides,
    monomials_of_degree,
)
from src.config import ConeStrategy, get_settings
from src.errors import GroupShapeError, WorkbenchError
from src.groups.matgroup import FiniteMatGroup, scalar_cone_points
from src.groups.matrices import CycMatrix

logger = structlog.get_logger(__name__)


@dataclass
class ConeIdeal:
    group: FiniteMatGroup
    line_reps: list[CycMatrix]
    ideal: Ideal
    construction_log: list[str]

    @property
    def num_lines(self) -> int:
        return len(self.line_reps)

    def profile(self) -> VarietyProfile:
        return profile(self.ideal)


def line_ideal(point: Sequence[CycNum], order: MonomialOrder) -> Ideal:
    """
    Linear ideal of the line through ``point``: the 2x2 minors x_j*m_i - x_i*m_j.

    Minors against one fixed nonzero coordinate i span the same space.
    """
    nvars = len(point)
    i = next(k for k, v in enumerate(point) if not v.is_zero())

    def unit(k: int) -> Monomial:
        return tuple(1 if v == k else 0 for v in range(nvars))

    gens = [
        Poly.from_terms(nvars, [(unit(j), point[i]), (unit(i), -point[j])])
        for j in range(nvars)
        if j != i
    ]
    return Ideal(nvars, tuple(gens), order)


def vanishes_on(ideal: Ideal, points: Sequence[Sequence[CycNum]]) -> bool:
    return all(evaluate(g, p).is_zero() for g in ideal.generators for p in points)


def _by_intersection(points: list[list[CycNum]], order: MonomialOrder) -> Ideal:
    result = line_ideal(points[0], order)
    for k, point in enumerate(points[1:], start=2):
        result = ideal_intersect(result, line_ideal(point, order))
        logger.debug("Intersected line", lines=k, generators=len(result.generators))
    return Ideal(result.nvars, tuple(result.groebner()), order)


def _by_interpolation(points: list[list[CycNum]], order: MonomialOrder) -> Ideal:
    """
    Generators degree by degree from the kernel of monomial evaluation.

    Columns are sorted by increasing monomial, so each kernel vector's largest
    monomial is its free column. Points of a finite set in projective space are
    cut out in degrees up to one past the first degree where the evaluation map
    reaches full rank.
    """
    nvars = len(points[0])
    target = len(points)
    generators: list[Poly] = []
    leads: list[Monomial] = []
    full_rank_at: Optional[int] = None
    d = 0
    while full_rank_at is None or d <= full_rank_at:
        d += 1
        monos = sorted(monomials_of_degree(nvars, d), key=order.key)
        rows = [[evaluate(Poly.monomial(m), p) for m in monos] for p in points]
        basis = kernel(rows, len(monos))
        rank = len(monos) - len(basis)
        if full_rank_at is None and rank == target:
            full_rank_at = d
        for free, vector in basis:
            lead = monos[free]
            if any(monomial_divides(m, lead) for m in leads):
                continue
            leads.append(lead)
            terms = ((monos[k], v) for k, v in enumerate(vector) if not v.is_zero())
            generators.append(Poly.from_terms(nvars, terms))
        logger.debug("Interpolation degree", degree=d, rank=rank, generators=len(generators))
    return Ideal(nvars, tuple(generators), order)


def cone_ideal(
    group: FiniteMatGroup,
    strategy: Optional[ConeStrategy] = None,
    order: Optional[MonomialOrder] = None,
    cross_check_max_lines: Optional[int] = None,
) -> ConeIdeal:
    """
    Vanishing ideal of the scalar cone over ``group``.

    Args:
        group: Finite group with n^2 <= 16
        strategy: ``intersection`` or ``interpolation``; defaults from settings
        order: Monomial order of the returned ideal
        cross_check_max_lines: Interpolation results with at most this many lines are
            compared against the intersection construction

    Returns:
        ConeIdeal with the line representatives and a log of the checks performed
    """
    settings = get_settings()
    strategy = ConeStrategy(strategy or settings.default_strategy)
    order = order or MonomialOrder.from_name(settings.default_order.value)
    if cross_check_max_lines is None:
        cross_check_max_lines = settings.cross_check_max_lines
    if group.order == 0:
        raise GroupShapeError("empty group")
    if group.n * group.n > 16:
        raise GroupShapeError(f"matrix space of dimension {group.n ** 2} is too large")

    reps = scalar_cone_points(group)
    points = [m.flat() for m in reps]
    log = []

    if strategy is ConeStrategy.INTERSECTION:
        ideal = _by_intersection(points, order)
        log.append("intersection")
    else:
        ideal = _by_interpolation(points, order)
        log.append("interpolation")

    if not vanishes_on(ideal, points):
        raise WorkbenchError("cone ideal does not vanish on its lines")
    log.append("vanishing-checked")

    cone_profile = profile(ideal)
    if cone_profile != VarietyProfile(1, len(reps)):
        raise WorkbenchError(
            f"cone ideal has profile {cone_profile.as_dict()}, expected dimension 1 "
            f"and degree {len(reps)}"
        )
    log.append("profile-checked")

    if strategy is ConeStrategy.INTERPOLATION and len(reps) <= cross_check_max_lines:
        if not ideal_equal(ideal, _by_intersection(points, order)):
            raise WorkbenchError("interpolation and intersection cone ideals differ")
        log.append("cross-checked")

    logger.info(
        "Cone ideal built",
        group=group.name,
        strategy=strategy.value,
        lines=len(reps),
        generators=len(ideal.generators),
        gb_size=len(ideal.groebner()),
    )
    return ConeIdeal(group, reps, ideal, log)
