"""
Degree Bound Formulas

Exact big-integer evaluation of the closed-form degree bounds for toric envelopes
of subgroups of GL_n. No floating point is used anywhere: irrational values are
handled in Z[sqrt(8n)] and rounded up with ``integer_nthroot``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Optional, Sequence

import structlog
from sympy import binomial, integer_nthroot

from src.config import get_settings
from src.errors import ParameterError

logger = structlog.get_logger(__name__)

KNOWN_A = {1: 2, 2: 6, 3: 12}


def _require(n: int, low: int, what: str) -> None:
    if n < low:
        raise ParameterError(f"{what} needs n >= {low}, got {n}")


@dataclass(frozen=True)
class SchurValue:
    """(sqrt(8n) + 1)^(2n^2) - (sqrt(8n) - 1)^(2n^2), rounded up when irrational."""

    value: int
    integral: bool


def schur_J(n: int) -> SchurValue:
    """
    Jordan-type bound for the index of a normal abelian subgroup.

    Only odd powers of sqrt(8n) survive the binomial difference, so the value is
    sqrt(8n) * B for an integer B.

    Args:
        n: Matrix size, at least 1

    Returns:
        SchurValue with the exact integer, or its ceiling and ``integral=False``
    """
    _require(n, 1, "schur_J")
    base = 8 * n
    top = 2 * n * n
    b = 2 * sum(int(binomial(top, k)) * base ** ((k - 1) // 2) for k in range(1, top + 1, 2))
    root, exact = integer_nthroot(base, 2)
    if exact:
        return SchurValue(int(root) * b, True)
    floor, exact = integer_nthroot(base * b * b, 2)
    return SchurValue(int(floor) + (0 if exact else 1), bool(exact))


@dataclass(frozen=True)
class ABound:
    """Largest order of a finite abelian-by-permutation quotient, exact when known."""

    exact: Optional[int]
    upper: int

    @property
    def value(self) -> int:
        return self.exact if self.exact is not None else self.upper


def A_bound(n: int) -> ABound:
    _require(n, 1, "A_bound")
    return ABound(KNOWN_A.get(n), 2 * 3 ** (n * n // 4))


def unipotent_bound(n: int) -> int:
    """Degree bound for a unipotent subgroup of GL_n: product of k! for k < n."""
    _require(n, 1, "unipotent_bound")
    return prod(factorial(k) for k in range(1, n))


def unipotent_bezout_form(n: int) -> int:
    """The same bound written as prod k^(n-k) for 2 <= k < n."""
    _require(n, 1, "unipotent_bezout_form")
    return prod(k ** (n - k) for k in range(2, n))


def reductive_bound(n: int) -> int:
    _require(n, 2, "reductive_bound")
    return schur_J(n).value * A_bound(n - 1).value * n ** (n * n + n - 5)


def component_bound(n: int) -> int:
    """Bound on the number of components of the reductive envelope."""
    _require(n, 2, "component_bound")
    return schur_J(n).value * A_bound(n - 1).value * n ** (n - 1)


def normalizer_bound(n: int, dim_g0: int, dim_g: int, deg_g0: int) -> int:
    """Degree of the normalizer part cut from a group of degree ``deg_g0``."""
    if dim_g > dim_g0:
        raise ParameterError(f"dim_g ({dim_g}) exceeds dim_g0 ({dim_g0})")
    return n ** (dim_g0 - dim_g) * deg_g0


def product_factor(n: int) -> int:
    return 2 ** (n * (n - 1) // 2)


def product_bound(d1: int, d2: int, n: int) -> int:
    """
    Degree bound for a product of a reductive part and a unipotent part.

    Args:
        d1: Degree bound of the reductive part
        d2: Degree bound of the unipotent part
        n: Matrix size

    Returns:
        d1 * d2 * 2^(n(n-1)/2)
    """
    if d1 < 1 or d2 < 1:
        raise ParameterError("degrees must be positive")
    return d1 * d2 * product_factor(n)


def product_bound_precise(d1: int, d2: int, blocks: Sequence[int]) -> int:
    """Product bound when the reductive part is block diagonal with the given sizes."""
    if d1 < 1 or d2 < 1:
        raise ParameterError("degrees must be positive")
    if not blocks or any(b < 1 for b in blocks):
        raise ParameterError("block sizes must be positive")
    n = sum(blocks)
    exponent = n * (n - 1) // 2 - sum(b * (b - 1) // 2 for b in blocks)
    return d1 * d2 * 2**exponent


def tight_bound(n: int) -> int:
    _require(n, 2, "tight_bound")
    return reductive_bound(n) * product_factor(n) * unipotent_bound(n)


def headline_bound(n: int) -> int:
    """1, 6 and 360 for n = 1, 2, 3; (4n)^(3n^2) from then on."""
    _require(n, 1, "headline_bound")
    special = {1: 1, 2: 6, 3: 360}
    return special.get(n, (4 * n) ** (3 * n * n))


def lower_bound_factorial(n: int) -> int:
    """Degree n! reached by the permutation matrices times the diagonal torus."""
    _require(n, 1, "lower_bound_factorial")
    return factorial(n)


def substitution_chain(n: int) -> dict[str, bool]:
    """
    The inequalities that take the tight bound to (4n)^(3n^2).

    Returns:
        Mapping from a readable inequality to whether it holds at ``n``
    """
    _require(n, 2, "substitution_chain")
    return {
        "J(n) <= 4^(2n^2) n^(n^2)": schur_J(n).value <= 4 ** (2 * n * n) * n ** (n * n),
        "A(n-1) <= 4^(n^2)": A_bound(n - 1).value <= 4 ** (n * n),
        "prod k! <= (n/2)^(n(n-1)/2)": unipotent_bound(n)
        <= Fraction(n, 2) ** (n * (n - 1) // 2),
        "tight <= (4n)^(3n^2)": tight_bound(n) <= (4 * n) ** (3 * n * n),
    }


@dataclass
class BoundSummary:
    n: int
    schur: SchurValue
    a: ABound
    unipotent: int
    product_factor: int
    headline: int
    lower_bound_factorial: int
    reductive: Optional[int] = None
    component: Optional[int] = None
    tight: Optional[int] = None
    findings: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "schur_J": self.schur.value,
            "schur_J_integral": self.schur.integral,
            "A_exact": self.a.exact,
            "A_upper": self.a.upper,
            "unipotent": self.unipotent,
            "reductive": self.reductive,
            "component": self.component,
            "product_factor": self.product_factor,
            "tight": self.tight,
            "headline": self.headline,
            "lower_bound_factorial": self.lower_bound_factorial,
            "findings": list(self.findings),
        }


def bound_summary(n: int, verified_max_n: Optional[int] = None) -> BoundSummary:
    """
    Every bound at ``n`` together with the checks that relate them.

    Failed checks are recorded as findings and logged; they never raise.
    """
    _require(n, 1, "bound_summary")
    if verified_max_n is None:
        verified_max_n = get_settings().bounds_verified_max_n
    summary = BoundSummary(
        n=n,
        schur=schur_J(n),
        a=A_bound(n),
        unipotent=unipotent_bound(n),
        product_factor=product_factor(n),
        headline=headline_bound(n),
        lower_bound_factorial=lower_bound_factorial(n),
    )
    findings = summary.findings
    if n >= 2:
        summary.reductive = reductive_bound(n)
        summary.component = component_bound(n)
        summary.tight = tight_bound(n)
        parts = summary.schur.value * A_bound(n - 1).value * n ** (n * n + n - 5)
        if parts != summary.reductive:
            findings.append("reductive bound does not recompose from its parts")
        for claim, holds in substitution_chain(n).items():
            if not holds:
                findings.append(f"substitution fails: {claim}")
        if 4 <= n <= verified_max_n and summary.tight > summary.headline:
            findings.append("tight bound exceeds headline bound")
    if summary.a.exact is not None and summary.a.exact > summary.a.upper:
        findings.append("known A value exceeds its upper bound")
    if summary.lower_bound_factorial > summary.headline:
        findings.append("n! exceeds headline bound")
    if unipotent_bezout_form(n) != summary.unipotent:
        findings.append("unipotent bound forms disagree")

    for finding in findings:
        logger.warning("Bound finding", n=n, finding=finding)
    return summary
