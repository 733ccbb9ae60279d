"""
Exact Matrices over Cyclotomic Fields
"""

from dataclasses import dataclass
from functools import cached_property
from math import lcm
from typing import Optional, Sequence

from src.algebra.exactnum import ONE, ZERO, CycNum
from src.algebra.linalg import rref
from src.errors import SingularMatrixError


@dataclass(frozen=True, eq=False)
class CycMatrix:
    """A square matrix of CycNum entries; equal matrices hash equally."""

    rows: tuple[tuple[CycNum, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square and nonempty")

    @classmethod
    def of(cls, rows: Sequence[Sequence]) -> "CycMatrix":
        """Build from nested sequences of CycNum or ints."""
        return cls(
            tuple(
                tuple(v if isinstance(v, CycNum) else CycNum.rational(v) for v in row)
                for row in rows
            )
        )

    @classmethod
    def identity(cls, n: int) -> "CycMatrix":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[CycNum]) -> "CycMatrix":
        n = len(values)
        return cls(
            tuple(tuple(values[i] if i == j else ZERO for j in range(n)) for i in range(n))
        )

    @property
    def n(self) -> int:
        return len(self.rows)

    @cached_property
    def _hash(self) -> int:
        return hash(self.rows)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        return mat_mul(self, other)

    def flat(self) -> list[CycNum]:
        """Entries in row-major order, matching x11, x12, ..., xnn."""
        return [v for row in self.rows for v in row]

    def conductor(self) -> int:
        return lcm(*(v.conductor for v in self.flat()))

    def scale(self, c: CycNum) -> "CycMatrix":
        return CycMatrix(tuple(tuple(c * v for v in row) for row in self.rows))


def mat_mul(a: CycMatrix, b: CycMatrix) -> CycMatrix:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch {a.n} vs {b.n}")
    n = a.n
    cols = [[b.rows[k][j] for k in range(n)] for j in range(n)]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = ZERO
            for x, y in zip(a.rows[i], cols[j]):
                if not x.is_zero() and not y.is_zero():
                    acc = acc + x * y
            row.append(acc)
        rows.append(tuple(row))
    return CycMatrix(tuple(rows))


def det(m: CycMatrix) -> CycNum:
    """Determinant by Gaussian elimination."""
    work = [list(r) for r in m.rows]
    n = m.n
    result = ONE
    for col in range(n):
        pivot = next((i for i in range(col, n) if not work[i][col].is_zero()), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            result = -result
        p = work[col][col]
        result = result * p
        for i in range(col + 1, n):
            if work[i][col].is_zero():
                continue
            factor = work[i][col] / p
            work[i] = [a - factor * b for a, b in zip(work[i], work[col])]
    return result


def inverse(m: CycMatrix) -> CycMatrix:
    """Inverse by Gauss-Jordan on [M | I]."""
    n = m.n
    augmented = [
        list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(m.rows)
    ]
    echelon, pivots = rref(augmented)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is not invertible")
    return CycMatrix(tuple(tuple(row[n:]) for row in echelon))


def is_scalar(m: CycMatrix) -> bool:
    first = m.rows[0][0]
    return all(
        (v == first) if i == j else v.is_zero()
        for i, row in enumerate(m.rows)
        for j, v in enumerate(row)
    )


def order_of(m: CycMatrix, cap: int = 10000) -> Optional[int]:
    """Multiplicative order, or ``None`` if it exceeds ``cap``."""
    identity = CycMatrix.identity(m.n)
    power = m
    for k in range(1, cap + 1):
        if power == identity:
            return k
        power = mat_mul(power, m)
    return None


def is_unipotent(m: CycMatrix) -> bool:
    """True iff (M - I)^n = 0."""
    n = m.n
    shifted = CycMatrix(
        tuple(
            tuple(v - ONE if i == j else v for j, v in enumerate(row))
            for i, row in enumerate(m.rows)
        )
    )
    power = shifted
    for _ in range(n - 1):
        power = mat_mul(power, shifted)
    return all(v.is_zero() for v in power.flat())
