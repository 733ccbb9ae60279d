"""
Hilbert Series of Monomial Ideals

Dimension and degree of an affine variety read off the leading-term ideal of a
Groebner basis under a graded order. The numerator K(t) of the Hilbert series
HS(t) = K(t) / (1 - t)^n is computed by pivot splitting on a variable:

    K(M) = K(M + <x>) + t * K(M : x)
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import structlog
from sympy import Poly as SymPoly
from sympy import Symbol
from sympy.polys.domains import ZZ

from src.algebra.multipoly import (
    Monomial,
    minimalize_monomials,
    monomial_divides,
    monomials_of_degree,
)
from src.errors import EmptyVarietyError, MixedDimensionError

logger = structlog.get_logger(__name__)

T = Symbol("t")


@dataclass(frozen=True)
class VarietyProfile:
    """(dimension, degree) of an affine variety."""

    dimension: int
    degree: int

    def as_dict(self) -> dict:
        return {"dimension": self.dimension, "degree": self.degree}


# =============================================================================
# Numerator
# =============================================================================


def _unit(n: int, index: int) -> Monomial:
    return tuple(1 if i == index else 0 for i in range(n))


@lru_cache(maxsize=4096)
def _numerator(gens: frozenset, n: int) -> SymPoly:
    one = SymPoly(1, T, domain=ZZ)
    if not gens:
        return one
    if any(sum(m) == 0 for m in gens):
        return SymPoly(0, T, domain=ZZ)

    supports = [[i for i, e in enumerate(m) if e] for m in gens]
    if all(len(s) == 1 for s in supports):
        # minimal generators that are pure powers sit in distinct variables
        result = one
        for m in gens:
            result = result * SymPoly(1 - T ** sum(m), T, domain=ZZ)
        return result

    # pivot on the variable shared by the most non-pure generators
    counts = [0] * n
    for s in supports:
        if len(s) > 1:
            for i in s:
                counts[i] += 1
    pivot = max(range(n), key=lambda i: counts[i])
    x = _unit(n, pivot)

    with_pivot = frozenset(minimalize_monomials(list(gens) + [x]))
    colon = frozenset(
        minimalize_monomials(
            tuple(e - 1 if i == pivot and e else e for i, e in enumerate(m)) for m in gens
        )
    )
    return _numerator(with_pivot, n) + SymPoly(T, T, domain=ZZ) * _numerator(colon, n)


def hilbert_numerator(monomials: Iterable[Monomial], n: int) -> SymPoly:
    """
    K(t) with HS(t) = K(t) / (1 - t)^n for the ideal generated by ``monomials``.

    Args:
        monomials: Generators of a monomial ideal in n variables
        n: Number of variables

    Returns:
        Integer polynomial in t (sympy ``Poly`` over ZZ)
    """
    return _numerator(frozenset(minimalize_monomials(monomials)), n)


def _dimension_and_degree(monomials: Iterable[Monomial], n: int) -> tuple[int, int]:
    numerator = hilbert_numerator(monomials, n)
    if numerator.is_zero:
        raise EmptyVarietyError("the ideal is the whole ring")
    factor = SymPoly(1 - T, T, domain=ZZ)
    multiplicity = 0
    while numerator.eval(1) == 0:
        numerator = numerator.exquo(factor)
        multiplicity += 1
    return n - multiplicity, int(numerator.eval(1))


# =============================================================================
# Minimal primes
# =============================================================================


def minimal_primes(monomials: Iterable[Monomial], n: int) -> list[frozenset]:
    """
    Minimal primes of a monomial ideal, each a set of variable indices.

    They are the minimal vertex covers of the generators' supports; the component
    for cover S is the coordinate subspace of dimension n - |S|.
    """
    supports = sorted(
        {frozenset(i for i, e in enumerate(m) if e) for m in minimalize_monomials(monomials)},
        key=len,
    )
    if any(not s for s in supports):
        return []

    covers: set[frozenset] = set()

    def branch(chosen: frozenset, remaining: list) -> None:
        if any(c <= chosen for c in covers):
            return
        open_ = [s for s in remaining if not (s & chosen)]
        if not open_:
            covers.add(chosen)
            return
        for i in sorted(open_[0]):
            branch(chosen | {i}, open_[1:])

    branch(frozenset(), supports)
    minimal = [c for c in covers if not any(other < c for other in covers)]
    return sorted(minimal, key=lambda c: (len(c), sorted(c)))


# =============================================================================
# Profiles
# =============================================================================


def top_profile(monomials: Iterable[Monomial], n: int) -> tuple[int, int, bool]:
    """
    Dimension, degree of the top-dimensional part, and whether the zero set is pure.

    Raises ``EmptyVarietyError`` for the unit ideal; never raises on mixed input.
    """
    monomials = list(monomials)
    if n == 0:
        raise EmptyVarietyError("ring has no variables")
    dimension, degree = _dimension_and_degree(monomials, n)
    primes = minimal_primes(monomials, n)
    pure = len({len(p) for p in primes}) <= 1
    return dimension, degree, pure


def hilbert_profile(leading_terms: Iterable[Monomial], num_vars: int) -> VarietyProfile:
    """
    Affine dimension and degree from the leading monomials of a graded Groebner basis.

    Args:
        leading_terms: Leading monomials of the basis
        num_vars: Number of ring variables

    Returns:
        VarietyProfile of the zero set
    """
    dimension, degree, pure = top_profile(leading_terms, num_vars)
    if not pure:
        raise MixedDimensionError(
            "leading-term ideal has components of different dimensions; degree is undefined"
        )
    logger.debug("Hilbert profile", dimension=dimension, degree=degree, num_vars=num_vars)
    return VarietyProfile(dimension, degree)


def count_standard_monomials(monomials: Iterable[Monomial], n: int, max_degree: int) -> int:
    """Number of monomials of degree <= ``max_degree`` outside the ideal."""
    gens = minimalize_monomials(monomials)
    return sum(
        1
        for d in range(max_degree + 1)
        for m in monomials_of_degree(n, d)
        if not any(monomial_divides(g, m) for g in gens)
    )
