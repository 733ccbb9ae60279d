"""
Groebner Engine

Buchberger's algorithm with the normal selection strategy and both pair criteria,
plus the ideal operations built on it: membership, radical membership by the
Rabinowitsch trick, elimination, intersection and equality.
"""

import threading
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

import structlog

from src.algebra.hilbert import VarietyProfile, hilbert_profile
from src.algebra.multipoly import (
    GREVLEX,
    GRLEX,
    Monomial,
    MonomialOrder,
    Poly,
    drop_vars,
    extend_vars,
    minimalize_monomials,
    monic,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    poly_add,
    poly_mul,
    poly_sub,
    reduce,
    term_mul,
)

logger = structlog.get_logger(__name__)


# =============================================================================
# Buchberger
# =============================================================================


def s_polynomial(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    lm_f, lc_f = f.leading_term(order)
    lm_g, lc_g = g.leading_term(order)
    top = monomial_lcm(lm_f, lm_g)
    return poly_sub(
        term_mul(f, monomial_div(top, lm_f), 1 / lc_f),
        term_mul(g, monomial_div(top, lm_g), 1 / lc_g),
    )


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _reduced_basis(basis: list[Poly], order: MonomialOrder) -> list[Poly]:
    """Minimalize, inter-reduce and sort a Groebner basis."""
    leads = [g.leading_monomial(order) for g in basis]
    keep: list[int] = []
    for i, lm in enumerate(leads):
        dominated = any(
            monomial_divides(leads[j], lm) and (leads[j] != lm or j < i)
            for j in range(len(basis))
            if j != i
        )
        if not dominated:
            keep.append(i)
    minimal = [basis[i] for i in keep]
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        lm, lc = g.leading_term(order)
        tail = Poly(g.nvars, {m: c for m, c in g.terms.items() if m != lm})
        tail = reduce(tail, others, order)
        reduced.append(monic(poly_add(Poly(g.nvars, {lm: lc}), tail), order))
    return sorted(reduced, key=lambda g: order.key(g.leading_monomial(order)))


def groebner_basis(generators: Sequence[Poly], order: MonomialOrder) -> list[Poly]:
    """
    Reduced Groebner basis.

    Pairs are taken smallest lcm degree first, ties broken lexicographically on the
    lcm and then by index. Coprime leading terms and the chain criterion skip pairs.

    Args:
        generators: Polynomials in a common ring
        order: Monomial order

    Returns:
        Monic, inter-reduced basis sorted by increasing leading monomial; ``[]`` for
        the zero ideal and ``[1]`` for the unit ideal
    """
    basis = [monic(g, order) for g in generators if not g.is_zero()]
    if not basis:
        return []
    nvars = basis[0].nvars
    if any(g.is_constant() for g in basis):
        return [Poly.constant(nvars, 1)]

    leads = [g.leading_monomial(order) for g in basis]
    pending = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    processed: set[tuple[int, int]] = set()

    def pair_key(pair: tuple[int, int]) -> tuple:
        top = monomial_lcm(leads[pair[0]], leads[pair[1]])
        return (sum(top), top, pair)

    reductions = 0
    while pending:
        pair = min(pending, key=pair_key)
        pending.discard(pair)
        processed.add(pair)
        i, j = pair
        top = monomial_lcm(leads[i], leads[j])
        if _coprime(leads[i], leads[j]):
            continue
        if any(
            k not in pair
            and monomial_divides(leads[k], top)
            and (min(i, k), max(i, k)) in processed
            and (min(j, k), max(j, k)) in processed
            for k in range(len(basis))
        ):
            continue
        remainder = reduce(s_polynomial(basis[i], basis[j], order), basis, order)
        reductions += 1
        if remainder.is_zero():
            continue
        remainder = monic(remainder, order)
        if remainder.is_constant():
            return [Poly.constant(nvars, 1)]
        new = len(basis)
        basis.append(remainder)
        leads.append(remainder.leading_monomial(order))
        pending.update((k, new) for k in range(new))
        logger.debug(
            "S-pair added", basis_size=len(basis), degree=remainder.degree(), pending=len(pending)
        )

    result = _reduced_basis(basis, order)
    logger.debug("Groebner basis done", size=len(result), reductions=reductions, order=order.name)
    return result


def is_groebner(basis: Sequence[Poly], order: MonomialOrder) -> bool:
    """Every S-polynomial reduces to zero."""
    return all(
        reduce(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()
        for i in range(len(basis))
        for j in range(i + 1, len(basis))
    )


def is_reduced(basis: Sequence[Poly], order: MonomialOrder) -> bool:
    """Monic, and no term of any element divisible by another element's leading monomial."""
    leads = [g.leading_monomial(order) for g in basis]
    for i, g in enumerate(basis):
        if not g.leading_term(order)[1].is_one():
            return False
        for j, lm in enumerate(leads):
            if i != j and any(monomial_divides(lm, m) for m in g.terms):
                return False
    return True


# =============================================================================
# Ideals
# =============================================================================


@dataclass(eq=False)
class Ideal:
    """
    A finitely generated ideal with a write-once reduced Groebner basis cache.
    """

    nvars: int
    generators: tuple[Poly, ...]
    order: MonomialOrder = field(default_factory=MonomialOrder)
    _gb: Optional[tuple[Poly, ...]] = field(default=None, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @classmethod
    def of(cls, generators: Iterable[Poly], order: MonomialOrder, nvars: Optional[int] = None):
        gens = tuple(g for g in generators if not g.is_zero())
        if nvars is None:
            if not gens:
                raise ValueError("cannot infer the ring of an ideal with no generators")
            nvars = gens[0].nvars
        if any(g.nvars != nvars for g in gens):
            raise ValueError("generators live in different rings")
        return cls(nvars, gens, order)

    def groebner(self) -> tuple[Poly, ...]:
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = tuple(groebner_basis(self.generators, self.order))
        return self._gb

    def with_order(self, order: MonomialOrder) -> "Ideal":
        if order == self.order:
            return self
        return Ideal(self.nvars, self.generators, order)

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.groebner()]

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def max_degree(self) -> int:
        return max((g.degree() for g in self.groebner()), default=0)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)


def profile(ideal: Ideal) -> VarietyProfile:
    """Dimension and degree of V(ideal), via a graded order."""
    graded = ideal if ideal.order.is_graded else ideal.with_order(GREVLEX)
    return hilbert_profile(graded.leading_monomials(), ideal.nvars)


def truncate(basis: Sequence[Poly], d: int, order: MonomialOrder) -> Ideal:
    """The ideal generated by the basis elements of degree at most ``d``."""
    nvars = basis[0].nvars if basis else 0
    return Ideal.of((p for p in basis if p.degree() <= d), order, nvars=nvars)


def ideal_member(f: Poly, ideal: Ideal) -> bool:
    if f.is_zero():
        return True
    return reduce(f, ideal.groebner(), ideal.order).is_zero()


def radical_member(f: Poly, ideal: Ideal) -> bool:
    """
    f in sqrt(I) iff 1 in I + <1 - t*f> with a fresh variable t prepended.
    """
    if f.is_zero():
        return True
    extended = [extend_vars(g, 1) for g in ideal.generators]
    t = Poly.variable(ideal.nvars + 1, 0)
    one = Poly.constant(ideal.nvars + 1, 1)
    extended.append(poly_sub(one, poly_mul(t, extend_vars(f, 1))))
    return Ideal.of(extended, GREVLEX).is_unit()


def eliminate(ideal: Ideal, k: int) -> Ideal:
    """
    I intersected with the subring in all but the first ``k`` variables.

    The result lives in the smaller ring and keeps the ideal's base order; its
    generators are already a Groebner basis for it.
    """
    elim = MonomialOrder.elimination(k, ideal.order)
    gb = groebner_basis(ideal.generators, elim)
    kept = [drop_vars(g, k) for g in gb if not any(any(m[:k]) for m in g.terms)]
    base = MonomialOrder(elim.base)
    result = Ideal(ideal.nvars - k, tuple(kept), base)
    logger.debug("Eliminated", block=k, kept=len(kept), dropped=len(gb) - len(kept))
    return result


def ideal_sum(first: Ideal, second: Ideal) -> Ideal:
    _same_ring(first, second)
    return Ideal(first.nvars, first.generators + second.generators, first.order)


def _same_ring(first: Ideal, second: Ideal) -> None:
    if first.nvars != second.nvars:
        raise ValueError(f"ideals live in different rings ({first.nvars} vs {second.nvars})")


def _is_monomial_ideal(ideal: Ideal) -> bool:
    return all(len(g.terms) == 1 for g in ideal.generators)


def _monomial_intersect(first: Ideal, second: Ideal) -> Ideal:
    mons = minimalize_monomials(
        monomial_lcm(f.leading_monomial(first.order), g.leading_monomial(second.order))
        for f, g in product(first.generators, second.generators)
    )
    return Ideal(first.nvars, tuple(Poly.monomial(m) for m in mons), first.order)


def ideal_intersect(first: Ideal, second: Ideal) -> Ideal:
    """
    I ∩ J by eliminating t from t*I + (1 - t)*J.

    Monomial ideals take the lcm-of-generators route instead.
    """
    _same_ring(first, second)
    if not first.generators or not second.generators:
        return Ideal(first.nvars, (), first.order)
    if _is_monomial_ideal(first) and _is_monomial_ideal(second):
        return _monomial_intersect(first, second)
    n = first.nvars
    t = Poly.variable(n + 1, 0)
    one_minus_t = poly_sub(Poly.constant(n + 1, 1), t)
    gens = [poly_mul(t, extend_vars(f, 1)) for f in first.generators]
    gens += [poly_mul(one_minus_t, extend_vars(g, 1)) for g in second.generators]
    return eliminate(Ideal(n + 1, tuple(gens), first.order), 1)


def ideal_equal(first: Ideal, second: Ideal) -> bool:
    """Equality of reduced Groebner bases under the first ideal's order."""
    _same_ring(first, second)
    return first.groebner() == second.with_order(first.order).groebner()


def ideal_contains(big: Ideal, small: Ideal) -> bool:
    """small ⊆ big."""
    return all(ideal_member(g, big) for g in small.generators)


def point_ideal(point: Sequence, order: MonomialOrder = GRLEX) -> Ideal:
    """<x_i - a_i>: the maximal ideal of one point."""
    nvars = len(point)
    gens = tuple(Poly.variable(nvars, i) - Poly.constant(nvars, a) for i, a in enumerate(point))
    return Ideal(nvars, gens, order)


def vanishing_ideal(points: Sequence[Sequence], order: MonomialOrder = GRLEX) -> Ideal:
    """Vanishing ideal of a finite nonempty point set, one intersection per point."""
    result = point_ideal(points[0], order)
    for point in points[1:]:
        result = ideal_intersect(result, point_ideal(point, order))
    return result
