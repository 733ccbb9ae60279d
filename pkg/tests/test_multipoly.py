"""
Tests for Multivariate Polynomials
"""

import pytest

from src.algebra.exactnum import ONE, CycNum, root_of_unity
from src.algebra.multipoly import (
    GREVLEX,
    GRLEX,
    LEX,
    MonomialOrder,
    Poly,
    drop_vars,
    evaluate,
    extend_vars,
    format_poly,
    matrix_var_names,
    minimalize_monomials,
    monic,
    monomials_of_degree,
    parse_poly,
    reduce,
)
from src.errors import InputFormatError


class TestMonomials:
    """Tests for monomial helpers."""

    def test_count_of_degree(self):
        """Test there are C(n+d-1, d) monomials of degree d."""
        assert len(monomials_of_degree(3, 2)) == 6
        assert len(monomials_of_degree(4, 3)) == 20
        assert monomials_of_degree(0, 0) == [()]

    def test_minimalize(self):
        """Test that divisible monomials are dropped."""
        kept = minimalize_monomials([(2, 0), (1, 0), (0, 3), (1, 1), (0, 3)])
        assert sorted(kept) == [(0, 3), (1, 0)]


class TestMonomialOrders:
    """Tests for the monomial orders."""

    def test_grlex_versus_grevlex(self):
        """Test x*w^2 > y^3 in grlex but not in grevlex."""
        xw2, y3 = (1, 0, 2), (0, 3, 0)
        assert GRLEX.key(xw2) > GRLEX.key(y3)
        assert GREVLEX.key(y3) > GREVLEX.key(xw2)

    def test_degree_first(self):
        """Test graded orders compare total degree first."""
        for order in (GRLEX, GREVLEX):
            assert order.key((0, 0, 2)) > order.key((1, 0, 0))

    def test_lex(self):
        """Test that lex ignores total degree."""
        assert LEX.key((1, 0, 0)) > LEX.key((0, 5, 5))

    def test_elimination_puts_block_first(self):
        """Test any monomial with the eliminated variable is larger."""
        order = MonomialOrder.elimination(1, GRLEX)
        assert order.key((1, 0, 0)) > order.key((0, 3, 3))
        assert not order.is_graded
        assert order.name == "elimination(1,grlex)"

    def test_from_name(self):
        """Test lookup by name and rejection of unknown names."""
        assert MonomialOrder.from_name("grevlex") == GREVLEX
        with pytest.raises(InputFormatError):
            MonomialOrder.from_name("degrevlex")


class TestPolyArithmetic:
    """Tests for Poly construction and arithmetic."""

    def test_binomial_square(self, parse_xyw):
        """Test (x + y)^2 expands."""
        p, expected = parse_xyw("x + y", "x^2 + 2*x*y + y^2")
        assert p**2 == expected

    def test_cancellation_drops_terms(self, parse_xyw):
        """Test that x - x is the zero polynomial."""
        (x,) = parse_xyw("x")
        assert (x - x).is_zero()
        assert (x - x).degree() == -1

    def test_leading_term(self, parse_xyw):
        """Test leading monomial and coefficient under grlex."""
        (p,) = parse_xyw("3*x*y^2 - x^3 + w")
        assert p.leading_term(GRLEX) == ((3, 0, 0), -1)
        assert p.degree() == 3
        assert not p.is_homogeneous()

    def test_monic(self, parse_xyw):
        """Test scaling the leading coefficient to one."""
        p, expected = parse_xyw("2*x^2 - 4*y", "x^2 - 2*y")
        assert monic(p, GRLEX) == expected

    def test_different_rings_rejected(self):
        """Test adding polynomials from rings of different sizes fails."""
        with pytest.raises(ValueError):
            Poly.variable(2, 0) + Poly.variable(3, 0)


class TestEvaluateAndRings:
    """Tests for evaluation and ring changes."""

    def test_evaluate_at_roots(self):
        """Test x^3 - 1 vanishes at zeta_3."""
        p = parse_poly("x^3 - 1", ["x"])
        assert evaluate(p, [root_of_unity(3)]).is_zero()
        assert evaluate(p, [CycNum.rational(2)]) == 7

    def test_evaluate_wrong_arity(self, parse_xyw):
        """Test evaluation needs one coordinate per variable."""
        (p,) = parse_xyw("x")
        with pytest.raises(ValueError):
            evaluate(p, [ONE])

    def test_extend_and_drop(self, parse_xyw):
        """Test that dropping prepended variables undoes extend_vars."""
        (p,) = parse_xyw("x*y - w^2")
        wide = extend_vars(p, 2)
        assert wide.nvars == 5
        assert not wide.involves(0)
        assert drop_vars(wide, 2) == p

    def test_drop_used_variable(self):
        """Test dropping a variable that occurs is refused."""
        with pytest.raises(ValueError):
            drop_vars(Poly.variable(2, 0), 1)


class TestReduce:
    """Tests for multivariate division."""

    def test_normal_form(self, parse_xyw):
        """Test x^2*y reduces to x modulo x*y - 1."""
        p, g, r = parse_xyw("x^2*y", "x*y - 1", "x")
        assert reduce(p, [g], GRLEX) == r

    def test_remainder_has_no_divisible_terms(self, parse_xyw):
        """Test every remainder term escapes the leading monomials."""
        p, g1, g2 = parse_xyw("x^3*y + x*y^2 + w", "x^2 - y", "y^2 - w")
        r = reduce(p, [g1, g2], GRLEX)
        for mono in r.terms:
            assert not (mono[0] >= 2 or mono[1] >= 2)


class TestTextFormat:
    """Tests for parsing and printing polynomials."""

    def test_matrix_names(self):
        """Test row-major entry names."""
        assert matrix_var_names(2) == ["x11", "x12", "x21", "x22"]
        assert matrix_var_names(10)[:2] == ["x1_1", "x1_2"]

    def test_format_round_trip(self, xyw):
        """Test printing reproduces the canonical input string."""
        text = "x^2 - 1/2*y + 3"
        assert format_poly(parse_poly(text, xyw), xyw) == text

    def test_root_of_unity_coefficients(self):
        """Test that z is read as the primitive root of the conductor."""
        p = parse_poly("z*x + z^3", ["x"], conductor=3)
        assert p.terms[(1,)] == root_of_unity(3)
        assert p.terms[(0,)] == 1

    @pytest.mark.parametrize("text", ["x +", "q*x", "1/x", "sin(x)"])
    def test_malformed(self, xyw, text):
        """Test malformed polynomials name the generators field."""
        with pytest.raises(InputFormatError) as info:
            parse_poly(text, xyw)
        assert info.value.field == "generators"

    @pytest.mark.parametrize(
        "text",
        [
            "__import__('os').getcwd() and x",
            "x.conjugate()",
            "lambda: x",
            "1.5*x",
            "x; y",
            "[x, y]",
        ],
    )
    def test_outside_grammar(self, xyw, text):
        """Test that text outside the polynomial grammar never reaches the evaluator."""
        with pytest.raises(InputFormatError) as info:
            parse_poly(text, xyw)
        assert info.value.field == "generators"

    def test_z_is_reserved(self):
        """Test z cannot be a ring variable."""
        with pytest.raises(InputFormatError):
            parse_poly("z", ["z"])
