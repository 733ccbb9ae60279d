"""
Group Catalog

Named finite matrix groups: the finite subgroups of SL2 (cyclic, binary dihedral,
binary tetrahedral, octahedral and icosahedral) and the two auxiliary families
used by the worked examples.

Tags on the command line look like ``binary-icosahedral``, ``cyclic-3``,
``binary-dihedral-2``, ``dihedral-example-3`` and ``permutation-diag-3``.
"""

import re
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Optional

from src.algebra.exactnum import CycNum, cyc_inv, root_of_unity
from src.errors import ParameterError
from src.groups.matgroup import FiniteMatGroup, closure
from src.groups.matrices import CycMatrix


class GroupKind(str, Enum):
    CYCLIC = "cyclic"
    BINARY_DIHEDRAL = "binary-dihedral"
    BINARY_TETRAHEDRAL = "binary-tetrahedral"
    BINARY_OCTAHEDRAL = "binary-octahedral"
    BINARY_ICOSAHEDRAL = "binary-icosahedral"
    DIHEDRAL_EXAMPLE = "dihedral-example"
    PERMUTATION_DIAG = "permutation-diag"


PARAMETRIZED = {
    GroupKind.CYCLIC,
    GroupKind.BINARY_DIHEDRAL,
    GroupKind.DIHEDRAL_EXAMPLE,
    GroupKind.PERMUTATION_DIAG,
}

SL2_CATALOG = ("binary-tetrahedral", "binary-octahedral", "binary-icosahedral")


@dataclass(frozen=True)
class GroupName:
    kind: GroupKind
    param: Optional[int] = None

    @property
    def tag(self) -> str:
        return self.kind.value if self.param is None else f"{self.kind.value}-{self.param}"

    @classmethod
    def parse(cls, tag: str) -> "GroupName":
        match = re.fullmatch(r"([a-z\-]+?)(?:-(\d+))?", tag.strip().lower())
        if not match:
            raise ParameterError(f"unknown group tag {tag!r}")
        try:
            kind = GroupKind(match.group(1))
        except ValueError as exc:
            raise ParameterError(f"unknown group tag {tag!r}") from exc
        param = int(match.group(2)) if match.group(2) else None
        if (kind in PARAMETRIZED) != (param is not None):
            raise ParameterError(f"group tag {tag!r} has the wrong number of parameters")
        if param is not None and param < 1:
            raise ParameterError(f"group parameter must be positive, got {param}")
        return cls(kind, param)


# =============================================================================
# Generators
# =============================================================================


def _antidiag(b, c) -> CycMatrix:
    return CycMatrix.of([[0, b], [c, 0]])


def _quaternion_j() -> CycMatrix:
    return CycMatrix.of([[0, 1], [-1, 0]])


def cyclic_generators(m: int) -> list[CycMatrix]:
    """diag(zeta_m, zeta_m^-1)."""
    z = root_of_unity(m)
    return [CycMatrix.diagonal([z, cyc_inv(z)])]


def binary_dihedral_generators(m: int) -> list[CycMatrix]:
    """diag(zeta_2m, zeta_2m^-1) and [[0, 1], [-1, 0]]; order 4m."""
    z = root_of_unity(2 * m)
    return [CycMatrix.diagonal([z, cyc_inv(z)]), _quaternion_j()]


def binary_tetrahedral_generators() -> list[CycMatrix]:
    """Quaternion units i, j and (1 + i + j + k)/2 over Q(i)."""
    i = root_of_unity(4)
    half = CycNum.rational("1/2", 4)
    omega = CycMatrix.of(
        [
            [(1 + i) * half, (1 + i) * half],
            [(i - 1) * half, (1 - i) * half],
        ]
    )
    return [omega, CycMatrix.diagonal([i, -i]), _quaternion_j()]


def binary_octahedral_generators() -> list[CycMatrix]:
    """The tetrahedral generators plus diag(zeta_8, zeta_8^7)."""
    z = root_of_unity(8)
    return binary_tetrahedral_generators() + [CycMatrix.diagonal([z, root_of_unity(8, 7)])]


def binary_icosahedral_generators() -> list[CycMatrix]:
    """
    Klein's generators over Q(zeta_5).

    With e = zeta_5 and sqrt(5) = e - e^2 - e^3 + e^4:
    S = diag(e^3, e^2), U = [[-(e - e^4), e^2 - e^3], [e^2 - e^3, e - e^4]] / sqrt(5),
    T = [[0, 1], [-1, 0]].
    """
    e = [root_of_unity(5, k) for k in range(5)]
    sqrt5 = e[1] - e[2] - e[3] + e[4]
    inv = cyc_inv(sqrt5)
    a = (e[1] - e[4]) * inv
    b = (e[2] - e[3]) * inv
    s = CycMatrix.diagonal([e[3], e[2]])
    u = CycMatrix.of([[-a, b], [b, a]])
    return [s, u, _quaternion_j()]


def dihedral_example_generators(m: int) -> list[CycMatrix]:
    """diag(e, e^-1) with e of order 2m, and the swap [[0, 1], [1, 0]]; 4m elements."""
    z = root_of_unity(2 * m)
    return [CycMatrix.diagonal([z, cyc_inv(z)]), _antidiag(1, 1)]


def permutation_generators(n: int) -> list[CycMatrix]:
    """All n x n permutation matrices."""
    mats = []
    for perm in permutations(range(n)):
        mats.append(CycMatrix.of([[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)]))
    return mats


def permutation_patterns(n: int) -> list[tuple[int, ...]]:
    return list(permutations(range(n)))


# =============================================================================
# Lookup
# =============================================================================


def generators_for(name: GroupName) -> list[CycMatrix]:
    kind, m = name.kind, name.param
    if kind is GroupKind.CYCLIC:
        return cyclic_generators(m)
    if kind is GroupKind.BINARY_DIHEDRAL:
        return binary_dihedral_generators(m)
    if kind is GroupKind.BINARY_TETRAHEDRAL:
        return binary_tetrahedral_generators()
    if kind is GroupKind.BINARY_OCTAHEDRAL:
        return binary_octahedral_generators()
    if kind is GroupKind.BINARY_ICOSAHEDRAL:
        return binary_icosahedral_generators()
    if kind is GroupKind.DIHEDRAL_EXAMPLE:
        return dihedral_example_generators(m)
    return permutation_generators(m)


def named_group(name, cap: Optional[int] = None) -> FiniteMatGroup:
    """
    Build a catalog group by tag.

    Args:
        name: ``GroupName`` or its string tag
        cap: Closure cap override

    Returns:
        The enumerated group, carrying its tag as ``name``
    """
    if isinstance(name, str):
        name = GroupName.parse(name)
    return closure(generators_for(name), cap=cap, name=name.tag)
