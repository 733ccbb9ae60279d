"""
Degree Bound Search for Finite Subgroups of SL2

Given a finite G in SL2, build the vanishing ideal I of the scalar cone over G,
take its reduced Groebner basis B, and find the least d with
sqrt(<p in B : deg p <= d>) = I.

Since every truncation J_d lies in I and I is radical, the equality holds iff every
element of B lies in sqrt(J_d). Two certificates decide that:
- Hilbert: V(J_d) is a cone, so when its top part is one-dimensional of degree equal
  to the number of lines it is exactly the union of the lines; when it has dimension
  above one it is strictly larger
- Rabinowitsch: radical membership of each remaining element of B
"""

from dataclasses import dataclass, field
from typing import Optional

import structlog

from src.algebra.groebner import Ideal, radical_member, truncate
from src.algebra.hilbert import VarietyProfile, top_profile
from src.algebra.multipoly import MonomialOrder
from src.config import ConeStrategy, get_settings
from src.envelope.cone import ConeIdeal, cone_ideal
from src.errors import EmptyVarietyError, GroupShapeError, WorkbenchError
from src.groups.matgroup import FiniteMatGroup, determinants

logger = structlog.get_logger(__name__)


@dataclass
class EnvelopeBoundResult:
    d: int
    max_gb_degree: int
    gb_size: int
    profile: VarietyProfile
    num_lines: int
    order: MonomialOrder
    cone: Optional[ConeIdeal] = field(default=None, repr=False)
    certificates: dict[str, int] = field(default_factory=dict)
    scan: dict[int, bool] = field(default_factory=dict)


def _check_sl2(group: FiniteMatGroup) -> None:
    if group.n != 2:
        raise GroupShapeError(f"expected 2x2 matrices, got {group.n}x{group.n}")
    if any(d != 1 for d in determinants(group)):
        raise GroupShapeError("group is not contained in SL2")


def truncation_closes(
    basis: list,
    d: int,
    order: MonomialOrder,
    num_lines: int,
    use_certificate: bool = True,
    certificates: Optional[dict[str, int]] = None,
) -> bool:
    """
    Whether the basis elements of degree <= d already cut out the cone set-theoretically.

    Args:
        basis: Reduced Groebner basis of the cone ideal
        d: Truncation degree
        order: Order the basis was computed in
        num_lines: Number of lines of the cone
        use_certificate: Try the Hilbert certificate before Rabinowitsch
        certificates: Counter updated with the deciding method

    Returns:
        True iff sqrt(J_d) equals the cone ideal
    """
    tally = certificates if certificates is not None else {}
    truncated = truncate(basis, d, order)
    if not truncated.generators:
        tally["empty"] = tally.get("empty", 0) + 1
        return False

    if use_certificate:
        try:
            dimension, degree, _ = top_profile(truncated.leading_monomials(), truncated.nvars)
        except EmptyVarietyError:
            raise WorkbenchError("truncated cone ideal became the unit ideal") from None
        if dimension > 1:
            tally["hilbert-dimension"] = tally.get("hilbert-dimension", 0) + 1
            return False
        if dimension == 1 and degree == num_lines:
            tally["hilbert-degree"] = tally.get("hilbert-degree", 0) + 1
            return True

    tally["rabinowitsch"] = tally.get("rabinowitsch", 0) + 1
    return all(radical_member(p, truncated) for p in basis if p.degree() > d)


def algorithm1(
    group: FiniteMatGroup,
    order: Optional[MonomialOrder] = None,
    strategy: Optional[ConeStrategy] = None,
    full_scan: Optional[bool] = None,
    use_certificate: Optional[bool] = None,
) -> EnvelopeBoundResult:
    """
    Least d such that the scalar cone over ``group`` is cut out by basis elements of
    degree at most d.

    Args:
        group: Finite subgroup of SL2
        order: Monomial order for the basis; defaults from settings
        strategy: Cone ideal construction; defaults from settings
        full_scan: Evaluate every d and assert the test is monotone
        use_certificate: Allow the Hilbert certificate

    Returns:
        EnvelopeBoundResult
    """
    settings = get_settings()
    order = order or MonomialOrder.from_name(settings.default_order.value)
    full_scan = settings.algorithm1_full_scan if full_scan is None else full_scan
    use_certificate = settings.radical_certificate if use_certificate is None else use_certificate
    _check_sl2(group)

    cone = cone_ideal(group, strategy=strategy, order=order)
    ideal = Ideal(cone.ideal.nvars, cone.ideal.generators, order)
    basis = list(ideal.groebner())
    max_degree = max(p.degree() for p in basis)
    certificates: dict[str, int] = {}
    scan: dict[int, bool] = {}

    found: Optional[int] = None
    for d in range(1, max_degree + 1):
        closes = truncation_closes(basis, d, order, cone.num_lines, use_certificate, certificates)
        scan[d] = closes
        logger.debug("Truncation tested", d=d, closes=closes, order=order.name)
        if closes and found is None:
            found = d
            if not full_scan:
                break
        if found is not None and not closes:
            raise WorkbenchError(f"truncation test not monotone: holds at {found}, fails at {d}")

    if found is None:
        raise WorkbenchError("full basis does not cut out the cone")
    if found > max_degree:
        raise WorkbenchError("bound exceeds the basis degree")

    result = EnvelopeBoundResult(
        d=found,
        max_gb_degree=max_degree,
        gb_size=len(basis),
        profile=cone.profile(),
        num_lines=cone.num_lines,
        order=order,
        cone=cone,
        certificates=certificates,
        scan=scan,
    )
    logger.info(
        "Degree bound found",
        group=group.name,
        d=found,
        order=order.name,
        gb_size=len(basis),
        gb_max_degree=max_degree,
        lines=cone.num_lines,
    )
    return result
