"""
Tests for the Groebner Engine
"""

import random

import pytest
import sympy

from src.algebra.exactnum import CycNum
from src.algebra.groebner import (
    Ideal,
    eliminate,
    groebner_basis,
    ideal_contains,
    ideal_equal,
    ideal_intersect,
    ideal_member,
    ideal_sum,
    is_groebner,
    is_reduced,
    profile,
    radical_member,
    truncate,
    vanishing_ideal,
)
from src.algebra.hilbert import VarietyProfile
from src.algebra.multipoly import (
    GREVLEX,
    GRLEX,
    MonomialOrder,
    Poly,
    evaluate,
    format_poly,
    monic,
    monomials_of_degree,
    parse_poly,
)

NAMES = ["x", "y", "w"]


def _ideal(texts, order=GRLEX, names=NAMES):
    return Ideal(len(names), tuple(parse_poly(t, names) for t in texts), order)


def _random_generator(rng: random.Random, nvars: int) -> str:
    max_degree = 3 if nvars == 2 else 2
    monos = [m for d in range(max_degree + 1) for m in monomials_of_degree(nvars, d)]
    terms = []
    for mono in rng.sample(monos[1:], rng.randint(2, 3)):
        coeff = rng.choice([-3, -2, -1, 1, 2, 3])
        powers = [f"{n}^{e}" for n, e in zip(NAMES, mono)]
        terms.append(f"({coeff})*" + "*".join(powers))
    return " + ".join(terms)


def _sympy_basis(texts, nvars, order_name):
    symbols = sympy.symbols(NAMES[:nvars])
    exprs = [sympy.sympify(t.replace("^", "**"), locals=dict(zip(NAMES, symbols))) for t in texts]
    basis = sympy.groebner(exprs, *symbols, order=order_name, domain="QQ")
    order = MonomialOrder.from_name(order_name)
    return sorted(
        format_poly(monic(parse_poly(str(g), NAMES[:nvars]), order), NAMES[:nvars], order)
        for g in basis.exprs
    )


class TestGroebnerBasis:
    """Tests for Buchberger's algorithm."""

    def test_zero_and_unit(self):
        """Test the empty basis of the zero ideal and [1] for the unit ideal."""
        assert groebner_basis([], GRLEX) == []
        (x,) = [parse_poly("x", NAMES)]
        assert groebner_basis([x, x - Poly.constant(3, 1)], GRLEX) == [Poly.constant(3, 1)]

    def test_twisted_cubic(self):
        """Test the twisted cubic basis is reduced, complete and of degree 3."""
        ideal = _ideal(["y - x^2", "w - x^3"])
        basis = list(ideal.groebner())
        assert is_groebner(basis, GRLEX)
        assert is_reduced(basis, GRLEX)
        assert profile(ideal) == VarietyProfile(1, 3)

    def test_sorted_by_leading_monomial(self):
        """Test the basis is sorted by increasing leading monomial."""
        basis = _ideal(["x^2 - y", "x*y - w", "y^2 - x*w"]).groebner()
        keys = [GRLEX.key(g.leading_monomial(GRLEX)) for g in basis]
        assert keys == sorted(keys)

    def test_idempotent(self):
        """Test recomputing from a reduced basis returns it unchanged."""
        basis = list(_ideal(["x^2 + y*w - 1", "x*y - w^2"]).groebner())
        assert groebner_basis(basis, GRLEX) == basis

    def test_cache_is_write_once(self):
        """Test that the cached basis object is reused."""
        ideal = _ideal(["x*y - 1"])
        assert ideal.groebner() is ideal.groebner()

    @pytest.mark.parametrize("seed", range(20))
    @pytest.mark.parametrize("order_name", ["grlex", "grevlex"])
    def test_matches_sympy(self, seed, order_name):
        """Test reduced bases agree with sympy on random small ideals."""
        rng = random.Random(seed)
        nvars = rng.randint(2, 3)
        texts = [_random_generator(rng, nvars) for _ in range(rng.randint(1, 4 - nvars + 1))]
        names = NAMES[:nvars]
        order = MonomialOrder.from_name(order_name)
        mine = groebner_basis([parse_poly(t, names) for t in texts], order)
        assert sorted(format_poly(g, names, order) for g in mine) == _sympy_basis(
            texts, nvars, order_name
        )


class TestMembership:
    """Tests for ideal and radical membership."""

    def test_ideal_member(self):
        """Test x^2 lies in <x^2> but x does not."""
        ideal = _ideal(["x^2"])
        assert ideal_member(parse_poly("x^2*y - x^2", NAMES), ideal)
        assert not ideal_member(parse_poly("x", NAMES), ideal)

    def test_radical_member(self):
        """Test x lies in the radical of <x^2> and y does not."""
        ideal = _ideal(["x^2"])
        assert radical_member(parse_poly("x", NAMES), ideal)
        assert not radical_member(parse_poly("y", NAMES), ideal)

    def test_radical_of_non_monomial(self):
        """Test x - y lies in the radical of <(x - y)^3, w>."""
        ideal = _ideal(["(x - y)^3", "w"])
        assert radical_member(parse_poly("x - y", NAMES), ideal)
        assert not ideal_member(parse_poly("x - y", NAMES), ideal)

    def test_zero_is_always_member(self):
        """Test the zero polynomial lies in every ideal."""
        assert ideal_member(Poly(3), _ideal(["x"]))
        assert radical_member(Poly(3), _ideal(["x"]))


class TestIdealOperations:
    """Tests for elimination, sums and intersections."""

    def test_eliminate_parametrization(self):
        """Test eliminating s from x = s^2, y = s^3 gives the cusp."""
        names = ["s", "x", "y"]
        ideal = _ideal(["x - s^2", "y - s^3"], names=names)
        cusp = eliminate(ideal, 1)
        assert cusp.nvars == 2
        assert cusp.order == GRLEX
        assert ideal_equal(cusp, Ideal(2, (parse_poly("y^2 - x^3", ["x", "y"]),), GRLEX))

    def test_monomial_intersection(self):
        """Test <x> ∩ <y> = <x*y> through the lcm route."""
        meet = ideal_intersect(_ideal(["x"]), _ideal(["y"]))
        assert ideal_equal(meet, _ideal(["x*y"]))

    def test_elimination_intersection(self):
        """Test <x - 1> ∩ <x + 1> = <x^2 - 1>."""
        meet = ideal_intersect(_ideal(["x - 1"]), _ideal(["x + 1"]))
        assert ideal_equal(meet, _ideal(["x^2 - 1"]))

    def test_intersection_with_zero_ideal(self):
        """Test intersecting with the zero ideal gives the zero ideal."""
        assert ideal_intersect(_ideal(["x"]), Ideal(3, (), GRLEX)).generators == ()

    def test_sum_and_containment(self):
        """Test <x> + <y> contains both summands."""
        total = ideal_sum(_ideal(["x"]), _ideal(["y"]))
        assert ideal_contains(total, _ideal(["x"]))
        assert not ideal_contains(_ideal(["x"]), total)

    def test_equal_across_orders(self):
        """Test equality compares under the first ideal's order."""
        assert ideal_equal(_ideal(["x + y", "y^2"]), _ideal(["x + y", "x^2"], order=GREVLEX))

    def test_truncate(self):
        """Test truncation keeps only low-degree basis elements."""
        basis = _ideal(["y - x^2", "w - x^3"]).groebner()
        low = truncate(basis, 2, GRLEX)
        assert all(g.degree() <= 2 for g in low.generators)
        assert len(low.generators) < len(basis)


class TestVanishingIdeals:
    """Tests for ideals of finite point sets."""

    def test_points_profile(self):
        """Test four points have dimension 0 and degree 4."""
        points = [(0, 0), (1, 0), (0, 1), (2, 3)]
        ideal = vanishing_ideal(points)
        assert profile(ideal) == VarietyProfile(0, 4)

    def test_generators_vanish(self):
        """Test every basis element vanishes on every point."""
        points = [(1, -1, 2), (0, 0, 0), (2, 2, 1)]
        ideal = vanishing_ideal(points)
        for g in ideal.groebner():
            for p in points:
                assert evaluate(g, [CycNum.rational(c) for c in p]).is_zero()

    def test_union_is_intersection(self):
        """Test I(P) ∩ I(Q) = I(P ∪ Q)."""
        first, second = [(0, 0), (1, 1)], [(1, 1), (2, -1)]
        meet = ideal_intersect(vanishing_ideal(first), vanishing_ideal(second))
        assert ideal_equal(meet, vanishing_ideal([(0, 0), (1, 1), (2, -1)]))
