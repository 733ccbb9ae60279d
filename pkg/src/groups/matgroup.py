"""
Finite Matrix Groups

Breadth-first closure of a generating set, scalar-line representatives for the
cone over a group, and the JSON group-file format.
"""

from dataclasses import dataclass
from functools import cached_property
from math import lcm
from typing import Optional, Sequence

import structlog
from pydantic import ValidationError

from src.algebra.exactnum import CycNum, coeffs_to_cyc, embed_into, format_rational
from src.config import get_settings
from src.errors import ClosureCapExceeded, GroupShapeError, InputFormatError, SingularMatrixError
from src.groups.matrices import CycMatrix, det, inverse, is_scalar, mat_mul
from src.models.schemas import GroupFile, first_error_field

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class FiniteMatGroup:
    """
    A finite group of n x n matrices.

    ``elements`` starts with the identity and is in breadth-first discovery order.
    """

    n: int
    elements: tuple[CycMatrix, ...]
    generators: tuple[CycMatrix, ...]
    conductor: int = 1
    name: Optional[str] = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, m: CycMatrix) -> bool:
        return m in self._members

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.elements)


def _common_conductor(matrices: Sequence[CycMatrix]) -> int:
    return lcm(1, *(m.conductor() for m in matrices))


def _promote_matrix(m: CycMatrix, conductor: int) -> CycMatrix:
    return CycMatrix(tuple(tuple(embed_into(v, conductor) for v in row) for row in m.rows))


def closure(
    generators: Sequence[CycMatrix],
    cap: Optional[int] = None,
    name: Optional[str] = None,
) -> FiniteMatGroup:
    """
    Enumerate the group generated by ``generators``.

    Args:
        generators: Invertible square matrices of one dimension
        cap: Largest order enumerated; defaults to the ``closure_cap`` setting
        name: Optional tag recorded on the group

    Returns:
        The finite group

    Raises:
        ClosureCapExceeded: more than ``cap`` elements were found
    """
    if cap is None:
        cap = get_settings().closure_cap
    if not generators:
        raise GroupShapeError("a group needs at least one generator")
    n = generators[0].n
    if any(g.n != n for g in generators):
        raise GroupShapeError("generators have different dimensions")
    for g in generators:
        if det(g).is_zero():
            raise SingularMatrixError("generator is not invertible")

    conductor = _common_conductor(generators)
    gens = tuple(_promote_matrix(g, conductor) for g in generators)
    identity = _promote_matrix(CycMatrix.identity(n), conductor)

    seen = {identity}
    elements = [identity]
    frontier = [identity]
    while frontier:
        next_frontier = []
        for m in frontier:
            for g in gens:
                product = mat_mul(m, g)
                if product in seen:
                    continue
                seen.add(product)
                elements.append(product)
                next_frontier.append(product)
                if len(elements) > cap:
                    raise ClosureCapExceeded(cap)
        logger.debug("Closure frontier", found=len(elements), frontier=len(next_frontier))
        frontier = next_frontier

    logger.info("Group enumerated", name=name, order=len(elements), conductor=conductor)
    return FiniteMatGroup(n, tuple(elements), gens, conductor, name)


def is_closed(group: FiniteMatGroup) -> bool:
    """Closed under products and inverses."""
    members = set(group.elements)
    return all(mat_mul(a, b) in members for a in group.elements for b in group.elements) and all(
        inverse(a) in members for a in group.elements
    )


def scalar_subgroup(group: FiniteMatGroup) -> list[CycMatrix]:
    return [m for m in group.elements if is_scalar(m)]


def _line_key(m: CycMatrix) -> CycMatrix:
    pivot = next(v for v in m.flat() if not v.is_zero())
    return m.scale(1 / pivot)


def scalar_cone_points(group: FiniteMatGroup) -> list[CycMatrix]:
    """
    One element per line {c*M : c != 0} met by the group.

    Returns:
        Group elements, first-discovered representative of each line
    """
    seen = set()
    reps = []
    for m in group.elements:
        key = _line_key(m)
        if key not in seen:
            seen.add(key)
            reps.append(m)
    return reps


def determinants(group: FiniteMatGroup) -> list[CycNum]:
    return [det(m) for m in group.elements]


# =============================================================================
# Group files
# =============================================================================


def group_to_json(group: FiniteMatGroup) -> dict:
    """``{"n", "conductor", "generators"}`` with entries as coefficient arrays."""
    return {
        "n": group.n,
        "conductor": group.conductor,
        "generators": [
            [
                [[format_rational(c) for c in embed_into(v, group.conductor).coeffs] for v in row]
                for row in g.rows
            ]
            for g in group.generators
        ],
    }


def generators_from_json(data: dict) -> tuple[list[CycMatrix], int]:
    """
    Validate a group file and decode its generators.

    Returns:
        (generators, conductor)
    """
    try:
        parsed = GroupFile.model_validate(data)
    except ValidationError as exc:
        raise InputFormatError(exc.errors()[0]["msg"], field=first_error_field(exc)) from exc
    matrices = []
    for index, rows in enumerate(parsed.generators):
        if len(rows) != parsed.n or any(len(r) != parsed.n for r in rows):
            raise InputFormatError(
                f"generator is not {parsed.n}x{parsed.n}", field=f"generators.{index}"
            )
        entries = []
        for i, row in enumerate(rows):
            decoded = []
            for j, entry in enumerate(row):
                try:
                    decoded.append(coeffs_to_cyc(entry, parsed.conductor))
                except InputFormatError as exc:
                    raise InputFormatError(exc.message, field=f"generators.{index}.{i}.{j}") from exc
            entries.append(tuple(decoded))
        matrices.append(CycMatrix(tuple(entries)))
    return matrices, parsed.conductor


def group_from_json(data: dict, cap: Optional[int] = None, name: Optional[str] = None):
    generators, _ = generators_from_json(data)
    return closure(generators, cap=cap, name=name)
