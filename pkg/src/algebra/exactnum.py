"""
Exact Cyclotomic Arithmetic

Elements of Q(zeta_N) stored in the power basis 1, z, ..., z^(phi(N)-1) reduced
modulo the N-th cyclotomic polynomial. Rational coefficients are sympy ``QQ``
elements; the dense univariate helpers from ``sympy.polys`` do the reductions.

Mixed-conductor arithmetic promotes both operands to the lcm of the conductors.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd, lcm
from typing import Optional, Sequence, Union

from sympy import cyclotomic_poly, divisors, factorint, totient
from sympy.polys.densearith import dup_mul, dup_mul_ground, dup_rem
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_invert
from sympy.polys.polyerrors import NotInvertible

from src.errors import ConductorError, CycDivisionByZero, InputFormatError

Scalar = Union["CycNum", int]


# =============================================================================
# Rationals
# =============================================================================


def parse_rational(text: str):
    """
    Parse a ``"p/q"`` or ``"p"`` string into a ``QQ`` element.

    Args:
        text: Fraction with decimal integer numerator and denominator

    Returns:
        The rational in lowest terms
    """
    parts = str(text).strip().split("/")
    try:
        if len(parts) == 1:
            return QQ(int(parts[0]))
        if len(parts) == 2:
            num, den = int(parts[0]), int(parts[1])
            if den == 0:
                raise InputFormatError(f"zero denominator in {text!r}")
            return QQ(num, den)
    except ValueError as exc:
        raise InputFormatError(f"not a rational: {text!r}") from exc
    raise InputFormatError(f"not a rational: {text!r}")


def format_rational(value) -> str:
    """Canonical ``"p/q"`` form, ``"p"`` when the denominator is 1."""
    num, den = int(QQ.numer(value)), int(QQ.denom(value))
    return str(num) if den == 1 else f"{num}/{den}"


# =============================================================================
# Cyclotomic polynomials
# =============================================================================


@lru_cache(maxsize=None)
def _phi_dense(conductor: int) -> tuple:
    """Phi_N as a dense QQ coefficient tuple, highest degree first."""
    if conductor < 1:
        raise ConductorError(f"conductor must be positive, got {conductor}")
    coeffs = cyclotomic_poly(conductor, polys=True).all_coeffs()
    return tuple(QQ(int(c)) for c in coeffs)


def cyclotomic_polynomial(conductor: int) -> list[int]:
    """
    The N-th cyclotomic polynomial.

    Args:
        conductor: N >= 1

    Returns:
        Integer coefficients, lowest degree first (``[-1, 1]`` is z - 1)
    """
    return [int(c) for c in reversed(_phi_dense(conductor))]


def field_degree(conductor: int) -> int:
    """phi(N), the degree of Q(zeta_N) over Q."""
    return len(_phi_dense(conductor)) - 1


def _mobius(d: int) -> int:
    exps = factorint(d)
    if any(e > 1 for e in exps.values()):
        return 0
    return -1 if len(exps) % 2 else 1


@lru_cache(maxsize=None)
def _trace_weights(conductor: int) -> tuple:
    # Tr(z^k) / phi(N) = mu(d) / phi(d) with d the order of z^k.
    weights = []
    for k in range(field_degree(conductor)):
        d = conductor // gcd(conductor, k)
        weights.append(QQ(_mobius(d), int(totient(d))))
    return tuple(weights)


# =============================================================================
# CycNum
# =============================================================================


@dataclass(frozen=True, eq=False)
class CycNum:
    """
    An element of Q(zeta_N).

    ``coeffs[k]`` is the coefficient of zeta_N^k; there are exactly phi(N) of them.
    Equality and hashing compare field elements, so ``zeta_3`` equals ``zeta_6^2``.
    """

    conductor: int
    coeffs: tuple

    def __post_init__(self):
        if self.conductor < 1:
            raise ConductorError(f"conductor must be positive, got {self.conductor}")
        if len(self.coeffs) != field_degree(self.conductor):
            raise ConductorError(
                f"expected {field_degree(self.conductor)} coefficients "
                f"for conductor {self.conductor}, got {len(self.coeffs)}"
            )

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_dense(cls, dense: Sequence, conductor: int) -> "CycNum":
        """Build from a dense highest-first polynomial in z, reducing mod Phi_N."""
        phi = list(_phi_dense(conductor))
        reduced = dup_rem(dup_strip(list(dense)), phi, QQ)
        low_first = list(reversed(reduced))
        low_first += [QQ.zero] * (field_degree(conductor) - len(low_first))
        return cls(conductor, tuple(low_first))

    @classmethod
    def rational(cls, value, conductor: int = 1) -> "CycNum":
        """Embed a rational (int, ``QQ`` element or ``"p/q"`` string)."""
        if isinstance(value, str):
            value = parse_rational(value)
        coeffs = [QQ.zero] * field_degree(conductor)
        coeffs[0] = QQ.convert(value)
        return cls(conductor, tuple(coeffs))

    # -- views ----------------------------------------------------------------

    def dense(self) -> list:
        """Highest-first stripped coefficient list for the sympy dup routines."""
        return dup_strip(list(reversed(self.coeffs)))

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == QQ.one and all(not c for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(not c for c in self.coeffs[1:])

    @cached_property
    def normalized_trace(self):
        """Tr(a)/phi(N); unchanged by re-embedding into a larger field."""
        weights = _trace_weights(self.conductor)
        return sum((c * w for c, w in zip(self.coeffs, weights)), QQ.zero)

    # -- protocol -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CycNum.rational(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        a, b = promote(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        return hash(self.normalized_trace)

    def __add__(self, other: Scalar) -> "CycNum":
        return cyc_add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "CycNum":
        return cyc_sub(self, _coerce(other))

    def __rsub__(self, other: Scalar) -> "CycNum":
        return cyc_sub(_coerce(other), self)

    def __mul__(self, other: Scalar) -> "CycNum":
        return cyc_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "CycNum":
        return cyc_mul(self, cyc_inv(_coerce(other)))

    def __rtruediv__(self, other: Scalar) -> "CycNum":
        return cyc_mul(_coerce(other), cyc_inv(self))

    def __neg__(self) -> "CycNum":
        return CycNum(self.conductor, tuple(-c for c in self.coeffs))

    def __pow__(self, k: int) -> "CycNum":
        return cyc_pow(self, k)

    def __repr__(self) -> str:
        return f"CycNum({self.conductor}, {format_cyc(self)})"


def _coerce(value: Scalar) -> CycNum:
    if isinstance(value, CycNum):
        return value
    return CycNum.rational(value)


ZERO = CycNum.rational(0)
ONE = CycNum.rational(1)


# =============================================================================
# Field operations
# =============================================================================


def embed_into(a: CycNum, conductor: int) -> CycNum:
    """
    Represent ``a`` in Q(zeta_M) via zeta_N -> zeta_M^(M/N).

    Args:
        a: Element with conductor N
        conductor: Target conductor M, a multiple of N

    Returns:
        The same field element with conductor M
    """
    if conductor < 1 or conductor % a.conductor:
        raise ConductorError(f"conductor {a.conductor} does not divide {conductor}")
    if conductor == a.conductor:
        return a
    step = conductor // a.conductor
    dense = [QQ.zero] * ((len(a.coeffs) - 1) * step + 1)
    for k, c in enumerate(a.coeffs):
        dense[k * step] = c
    return CycNum.from_dense(list(reversed(dense)), conductor)


def promote(a: CycNum, b: CycNum) -> tuple[CycNum, CycNum]:
    """Bring two elements to a common conductor (the lcm)."""
    if a.conductor == b.conductor:
        return a, b
    target = lcm(a.conductor, b.conductor)
    return embed_into(a, target), embed_into(b, target)


def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    a, b = promote(a, b)
    return CycNum(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def cyc_sub(a: CycNum, b: CycNum) -> CycNum:
    a, b = promote(a, b)
    return CycNum(a.conductor, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    if a.is_rational() and b.conductor % a.conductor == 0:
        return CycNum(b.conductor, tuple(a.coeffs[0] * c for c in b.coeffs))
    if b.is_rational() and a.conductor % b.conductor == 0:
        return CycNum(a.conductor, tuple(b.coeffs[0] * c for c in a.coeffs))
    a, b = promote(a, b)
    return CycNum.from_dense(dup_mul(a.dense(), b.dense(), QQ), a.conductor)


def cyc_inv(a: CycNum) -> CycNum:
    """Multiplicative inverse via the extended Euclidean algorithm against Phi_N."""
    if a.is_zero():
        raise CycDivisionByZero("inverse of zero in a cyclotomic field")
    if a.is_rational():
        return CycNum.rational(QQ.one / a.coeffs[0], a.conductor)
    try:
        inverse = dup_invert(a.dense(), list(_phi_dense(a.conductor)), QQ)
    except NotInvertible as exc:  # unreachable for a field; Phi_N is irreducible
        raise CycDivisionByZero(str(exc)) from exc
    return CycNum.from_dense(inverse, a.conductor)


def cyc_pow(a: CycNum, k: int) -> CycNum:
    """Integer power; negative exponents go through ``cyc_inv``."""
    if k < 0:
        return cyc_pow(cyc_inv(a), -k)
    result = CycNum.rational(1, a.conductor)
    base = a
    while k:
        if k & 1:
            result = cyc_mul(result, base)
        k >>= 1
        if k:
            base = cyc_mul(base, base)
    return result


def cyc_scale(a: CycNum, q) -> CycNum:
    """Multiply by a rational."""
    return CycNum.from_dense(dup_mul_ground(a.dense(), QQ.convert(q), QQ), a.conductor)


def root_of_unity(conductor: int, k: int = 1) -> CycNum:
    """zeta_N^k reduced modulo Phi_N; ``k`` may be any integer."""
    k %= conductor
    dense = [QQ.one] + [QQ.zero] * k
    return CycNum.from_dense(dense, conductor)


def is_root_of_unity(a: CycNum) -> Optional[int]:
    """
    Multiplicative order of ``a`` if it is a root of unity.

    Roots of unity in Q(zeta_N) have order dividing lcm(2, N).

    Returns:
        The order, or ``None``
    """
    if a.is_zero():
        return None
    bound = lcm(2, a.conductor)
    if not cyc_pow(a, bound).is_one():
        return None
    for k in divisors(bound):
        if cyc_pow(a, int(k)).is_one():
            return int(k)
    return None


def conjugate(a: CycNum) -> CycNum:
    """Complex conjugation zeta_N -> zeta_N^-1."""
    result = CycNum.rational(0, a.conductor)
    for k, c in enumerate(a.coeffs):
        if c:
            result = cyc_add(result, cyc_scale(root_of_unity(a.conductor, -k), c))
    return result


# =============================================================================
# Serialization
# =============================================================================


def format_cyc(a: CycNum, var: str = "z") -> str:
    """Human form as a polynomial in ``var``, e.g. ``"1/2*z^2 - z + 3"``."""
    pieces = []
    for k in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if k == 0:
            body = format_rational(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == QQ.one else f"{format_rational(mag)}*{power}"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    head_sign, head = pieces[0]
    text = ("-" if head_sign == "-" else "") + head
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def cyc_to_json(a: CycNum) -> dict:
    """``{"conductor": N, "coeffs": ["p/q", ...]}``."""
    return {"conductor": a.conductor, "coeffs": [format_rational(c) for c in a.coeffs]}


def cyc_from_json(data: dict) -> CycNum:
    """Inverse of ``cyc_to_json``; short coefficient lists are reduced mod Phi_N."""
    try:
        conductor = int(data["conductor"])
        coeffs = [parse_rational(c) for c in data["coeffs"]]
    except (KeyError, TypeError) as exc:
        raise InputFormatError(f"malformed cyclotomic number: {exc}") from exc
    return coeffs_to_cyc(coeffs, conductor)


def coeffs_to_cyc(coeffs: Sequence, conductor: int) -> CycNum:
    """Lowest-first coefficients of any length, reduced into Q(zeta_N)."""
    if conductor < 1:
        raise ConductorError(f"conductor must be positive, got {conductor}")
    dense = [QQ.convert(c) if not isinstance(c, str) else parse_rational(c) for c in coeffs]
    return CycNum.from_dense(list(reversed(dense)) or [QQ.zero], conductor)
