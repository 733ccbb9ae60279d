"""
Exact Linear Algebra over Cyclotomic Fields

Gauss-Jordan elimination with first-nonzero pivoting, in the row-echelon style of
classic exact solvers: walk the columns, swap a pivot row up, clear the column.
"""

from typing import Sequence

from src.algebra.exactnum import ZERO, CycNum

Matrix = list[list[CycNum]]


def rref(rows: Sequence[Sequence[CycNum]]) -> tuple[Matrix, list[int]]:
    """
    Reduced row echelon form.

    Args:
        rows: Matrix as a list of rows

    Returns:
        (echelon rows with zero rows removed, pivot column indices)
    """
    matrix = [list(r) for r in rows]
    if not matrix:
        return [], []
    ncols = len(matrix[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(matrix)) if not matrix[i][col].is_zero()), None)
        if pivot_row is None:
            continue
        matrix[r], matrix[pivot_row] = matrix[pivot_row], matrix[r]
        inv = 1 / matrix[r][col]
        matrix[r] = [v * inv if not v.is_zero() else v for v in matrix[r]]
        for i in range(len(matrix)):
            if i == r:
                continue
            factor = matrix[i][col]
            if factor.is_zero():
                continue
            matrix[i] = [
                a - factor * b if not b.is_zero() else a for a, b in zip(matrix[i], matrix[r])
            ]
        pivots.append(col)
        r += 1
        if r == len(matrix):
            break
    return matrix[:r], pivots


def rank(rows: Sequence[Sequence[CycNum]]) -> int:
    return len(rref(rows)[1])


def kernel(rows: Sequence[Sequence[CycNum]], ncols: int) -> list[tuple[int, list[CycNum]]]:
    """
    Basis of the right kernel, one vector per free column.

    Each vector has a 1 at its free column and is zero at every later column, so the
    free column is its largest nonzero position.

    Returns:
        (free column, vector) pairs in increasing free-column order
    """
    echelon, pivots = rref(rows) if rows else ([], [])
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [ZERO] * ncols
        vector[free] = CycNum.rational(1)
        for row, pcol in zip(echelon, pivots):
            if not row[free].is_zero():
                vector[pcol] = -row[free]
        basis.append((free, vector))
    return basis
