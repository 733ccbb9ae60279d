"""
Multivariate Polynomials

Sparse polynomials over cyclotomic fields with dense exponent tuples as monomials,
the monomial orders used by the Groebner engine, multivariate division, and the
string format used in ideal files.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from math import lcm
from typing import Callable, Iterable, Mapping, Optional, Sequence

from sympy import Poly as SymPoly
from sympy import Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.domains import QQ
from sympy.polys.polyerrors import CoercionFailed, PolynomialError

from src.algebra.exactnum import ONE, ZERO, CycNum, coeffs_to_cyc, format_cyc, format_rational
from src.errors import InputFormatError

Monomial = tuple[int, ...]


# =============================================================================
# Monomials
# =============================================================================


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a divides b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    """Every exponent tuple of the given total degree."""
    if nvars == 0:
        return [()] if degree == 0 else []
    if nvars == 1:
        return [(degree,)]
    result = []
    for head in range(degree, -1, -1):
        for tail in monomials_of_degree(nvars - 1, degree - head):
            result.append((head,) + tail)
    return result


def minimalize_monomials(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Drop monomials divisible by another one in the set."""
    unique = sorted(set(monomials), key=lambda m: (sum(m), m))
    kept: list[Monomial] = []
    for m in unique:
        if not any(monomial_divides(k, m) for k in kept):
            kept.append(m)
    return kept


# =============================================================================
# Monomial orders
# =============================================================================


class OrderKind(str, Enum):
    GRLEX = "grlex"
    GREVLEX = "grevlex"
    LEX = "lex"
    ELIMINATION = "elimination"


def _grlex_key(m: Monomial) -> tuple:
    return (sum(m), m)


def _grevlex_key(m: Monomial) -> tuple:
    return (sum(m), tuple(-e for e in reversed(m)))


def _lex_key(m: Monomial) -> tuple:
    return m


_BASE_KEYS: dict[OrderKind, Callable[[Monomial], tuple]] = {
    OrderKind.GRLEX: _grlex_key,
    OrderKind.GREVLEX: _grevlex_key,
    OrderKind.LEX: _lex_key,
}


@dataclass(frozen=True)
class MonomialOrder:
    """
    A monomial order; larger keys are larger monomials.

    ``elimination`` orders put any monomial involving the first ``block`` variables
    above every monomial free of them, then break ties with the ``base`` order.
    Variables are ordered x_1 > x_2 > ... in every kind.
    """

    kind: OrderKind = OrderKind.GRLEX
    block: int = 0
    base: OrderKind = OrderKind.GRLEX

    def key(self, m: Monomial) -> tuple:
        if self.kind is OrderKind.ELIMINATION:
            return (sum(m[: self.block]),) + _BASE_KEYS[self.base](m)
        return _BASE_KEYS[self.kind](m)

    @property
    def is_graded(self) -> bool:
        return self.kind in (OrderKind.GRLEX, OrderKind.GREVLEX)

    @property
    def name(self) -> str:
        if self.kind is OrderKind.ELIMINATION:
            return f"elimination({self.block},{self.base.value})"
        return self.kind.value

    @classmethod
    def from_name(cls, name: str) -> "MonomialOrder":
        try:
            kind = OrderKind(name)
        except ValueError as exc:
            raise InputFormatError(f"unknown monomial order {name!r}", field="order") from exc
        if kind is OrderKind.ELIMINATION:
            raise InputFormatError("elimination orders need a block size", field="order")
        return cls(kind)

    @classmethod
    def elimination(cls, block: int, base: "MonomialOrder") -> "MonomialOrder":
        base_kind = base.base if base.kind is OrderKind.ELIMINATION else base.kind
        return cls(OrderKind.ELIMINATION, block, base_kind)


GRLEX = MonomialOrder(OrderKind.GRLEX)
GREVLEX = MonomialOrder(OrderKind.GREVLEX)
LEX = MonomialOrder(OrderKind.LEX)


# =============================================================================
# Polynomials
# =============================================================================


@dataclass(frozen=True)
class Poly:
    """
    A polynomial in ``nvars`` variables with CycNum coefficients.

    ``terms`` never stores a zero coefficient; the zero polynomial has no terms.
    """

    nvars: int
    terms: Mapping[Monomial, CycNum] = field(default_factory=dict)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_terms(cls, nvars: int, terms: Iterable[tuple[Monomial, CycNum]]) -> "Poly":
        """Collect like terms and drop zeros."""
        acc: dict[Monomial, CycNum] = {}
        for mono, coeff in terms:
            if not isinstance(coeff, CycNum):
                coeff = CycNum.rational(coeff)
            acc[mono] = acc[mono] + coeff if mono in acc else coeff
        return cls(nvars, {m: c for m, c in acc.items() if not c.is_zero()})

    @classmethod
    def constant(cls, nvars: int, value=1) -> "Poly":
        coeff = value if isinstance(value, CycNum) else CycNum.rational(value)
        return cls.from_terms(nvars, [((0,) * nvars, coeff)])

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Poly":
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(nvars, {mono: ONE})

    @classmethod
    def monomial(cls, mono: Monomial, coeff: Optional[CycNum] = None) -> "Poly":
        return cls.from_terms(len(mono), [(mono, coeff if coeff is not None else ONE)])

    # -- queries --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def conductor(self) -> int:
        return lcm(1, *(c.conductor for c in self.terms.values()))

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return max(self.terms, key=order.key)

    def leading_term(self, order: MonomialOrder) -> tuple[Monomial, CycNum]:
        mono = self.leading_monomial(order)
        return mono, self.terms[mono]

    def sorted_terms(self, order: MonomialOrder) -> list[tuple[Monomial, CycNum]]:
        """Terms from largest to smallest monomial."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def involves(self, index: int) -> bool:
        return any(m[index] for m in self.terms)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        return poly_add(self, other)

    def __sub__(self, other: "Poly") -> "Poly":
        return poly_sub(self, other)

    def __mul__(self, other: "Poly") -> "Poly":
        return poly_mul(self, other)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __pow__(self, k: int) -> "Poly":
        result = Poly.constant(self.nvars, 1)
        for _ in range(k):
            result = poly_mul(result, self)
        return result


def _check_ring(p: Poly, q: Poly) -> None:
    if p.nvars != q.nvars:
        raise ValueError(f"polynomials live in different rings ({p.nvars} vs {q.nvars} vars)")


def _accumulate(acc: dict, mono: Monomial, coeff: CycNum) -> None:
    if mono in acc:
        value = acc[mono] + coeff
        if value.is_zero():
            del acc[mono]
        else:
            acc[mono] = value
    elif not coeff.is_zero():
        acc[mono] = coeff


def poly_add(p: Poly, q: Poly) -> Poly:
    _check_ring(p, q)
    acc = dict(p.terms)
    for mono, coeff in q.terms.items():
        _accumulate(acc, mono, coeff)
    return Poly(p.nvars, acc)


def poly_sub(p: Poly, q: Poly) -> Poly:
    return poly_add(p, -q)


def poly_mul(p: Poly, q: Poly) -> Poly:
    _check_ring(p, q)
    acc: dict = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            _accumulate(acc, monomial_mul(m1, m2), c1 * c2)
    return Poly(p.nvars, acc)


def scalar_mul(p: Poly, c: CycNum) -> Poly:
    if c.is_zero():
        return Poly(p.nvars)
    return Poly(p.nvars, {m: c * v for m, v in p.terms.items()})


def term_mul(p: Poly, mono: Monomial, c: CycNum) -> Poly:
    """Multiply by the single term c * x^mono."""
    if c.is_zero():
        return Poly(p.nvars)
    return Poly(p.nvars, {monomial_mul(m, mono): c * v for m, v in p.terms.items()})


def monic(p: Poly, order: MonomialOrder) -> Poly:
    """Scale so the leading coefficient is 1."""
    if p.is_zero():
        return p
    _, lc = p.leading_term(order)
    if lc.is_one():
        return p
    return scalar_mul(p, 1 / lc)


def evaluate(p: Poly, point: Sequence[CycNum]) -> CycNum:
    """Value of ``p`` at a point given as one CycNum per variable."""
    if len(point) != p.nvars:
        raise ValueError(f"point has {len(point)} coordinates, ring has {p.nvars} variables")
    powers: dict[tuple[int, int], CycNum] = {}

    def power(i: int, e: int) -> CycNum:
        if (i, e) not in powers:
            powers[(i, e)] = point[i] ** e
        return powers[(i, e)]

    total = ZERO
    for mono, coeff in p.terms.items():
        value = coeff
        for i, e in enumerate(mono):
            if e:
                value = value * power(i, e)
        total = total + value
    return total


def extend_vars(p: Poly, k: int, at_front: bool = True) -> Poly:
    """Embed into a ring with ``k`` extra variables (prepended or appended)."""
    pad = (0,) * k
    terms = {(pad + m if at_front else m + pad): c for m, c in p.terms.items()}
    return Poly(p.nvars + k, terms)


def drop_vars(p: Poly, k: int) -> Poly:
    """Inverse of ``extend_vars(p, k, at_front=True)`` for polys free of the first k vars."""
    if any(any(m[:k]) for m in p.terms):
        raise ValueError("polynomial involves a variable being dropped")
    return Poly(p.nvars - k, {m[k:]: c for m, c in p.terms.items()})


# =============================================================================
# Division
# =============================================================================


def reduce(p: Poly, basis: Sequence[Poly], order: MonomialOrder) -> Poly:
    """
    Full normal form of ``p`` modulo ``basis``.

    Args:
        p: Polynomial to reduce
        basis: Nonzero divisors
        order: Monomial order fixing leading terms

    Returns:
        Remainder r with p - r in the ideal of ``basis`` and no term of r divisible
        by a leading monomial of ``basis``
    """
    leads = [g.leading_term(order) for g in basis]
    work = dict(p.terms)
    remainder: dict[Monomial, CycNum] = {}
    while work:
        mono = max(work, key=order.key)
        coeff = work[mono]
        for g, (lm, lc) in zip(basis, leads):
            if monomial_divides(lm, mono):
                shift = monomial_div(mono, lm)
                factor = coeff / lc
                for gm, gc in g.terms.items():
                    _accumulate(work, monomial_mul(gm, shift), -(factor * gc))
                break
        else:
            remainder[mono] = work.pop(mono)
    return Poly(p.nvars, remainder)


# =============================================================================
# Text format
# =============================================================================


def matrix_var_names(n: int) -> list[str]:
    """x11, x12, ..., xnn in row-major order."""
    if n > 9:
        return [f"x{i}_{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    return [f"x{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]


_TOKEN = re.compile(r"\s*(?:(?P<number>[0-9]+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))\s*")


def _check_tokens(text: str, allowed: set[str]) -> None:
    """Reject anything outside numbers, ring variables, ``z`` and ``+ - * / ^ ( )``."""
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise InputFormatError(
                f"unexpected character {text[pos]!r} in {text!r}", field="generators"
            )
        name = match.group("name")
        if name is not None and name not in allowed:
            raise InputFormatError(f"unknown symbol {name!r} in {text!r}", field="generators")
        pos = match.end()


def parse_poly(text: str, var_names: Sequence[str], conductor: int = 1) -> Poly:
    """
    Parse a polynomial string such as ``"x11^3 - (1/2*z + 1)*x22"``.

    ``z`` denotes the primitive root of unity of the declared conductor. The text is
    tokenized first; only numbers, the ring variables, ``z`` and ``+ - * / ^ ( )``
    ever reach sympy.

    Args:
        text: Polynomial with integer or rational coefficients
        var_names: Ring variables in order
        conductor: Conductor N of the coefficient field Q(zeta_N)

    Returns:
        The parsed polynomial
    """
    if "z" in var_names:
        raise InputFormatError("'z' is reserved for the root of unity", field="vars")
    symbols = {name: Symbol(name) for name in var_names}
    z = Symbol("z")
    local = dict(symbols, z=z)
    _check_tokens(text, set(local))
    try:
        expr = parse_expr(
            text,
            local_dict=local,
            transformations=standard_transformations + (convert_xor,),
        )
    except Exception as exc:  # sympy raises a wide range of parse errors
        raise InputFormatError(f"cannot parse {text!r}: {exc}", field="generators") from exc
    unknown = {str(s) for s in expr.free_symbols} - set(local)
    if unknown:
        raise InputFormatError(
            f"unknown symbols {sorted(unknown)} in {text!r}", field="generators"
        )
    gens = [symbols[name] for name in var_names] + [z]
    try:
        sym = SymPoly(expr, *gens, domain=QQ)
    except (PolynomialError, CoercionFailed) as exc:
        raise InputFormatError(f"not a polynomial: {text!r}", field="generators") from exc

    nvars = len(var_names)
    grouped: dict[Monomial, list] = {}
    for monom, coeff in sym.terms():
        mono, zexp = tuple(monom[:nvars]), monom[nvars]
        coeffs = grouped.setdefault(mono, [])
        coeffs.extend([QQ.zero] * (zexp + 1 - len(coeffs)))
        coeffs[zexp] += QQ.convert(coeff)
    return Poly.from_terms(
        nvars, ((mono, coeffs_to_cyc(cs, conductor)) for mono, cs in grouped.items())
    )


def _format_coeff(c: CycNum) -> tuple[str, str]:
    """Sign and magnitude text for a coefficient."""
    if c.is_rational():
        q = c.coeffs[0]
        return ("-" if q < 0 else "+", format_rational(-q if q < 0 else q))
    return "+", f"({format_cyc(c)})"


def format_poly(p: Poly, var_names: Sequence[str], order: MonomialOrder = GRLEX) -> str:
    """Inverse of ``parse_poly`` with terms sorted from largest to smallest."""
    if p.is_zero():
        return "0"
    pieces = []
    for mono, coeff in p.sorted_terms(order):
        sign, mag = _format_coeff(coeff)
        factors = [
            name if e == 1 else f"{name}^{e}" for name, e in zip(var_names, mono) if e
        ]
        if not factors:
            body = mag
        elif mag == "1":
            body = "*".join(factors)
        else:
            body = "*".join([mag] + factors)
        pieces.append((sign, body))
    head_sign, head = pieces[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text
