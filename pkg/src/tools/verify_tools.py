"""
Verification Tools

The acceptance suite: each case recomputes a published number or a structural
property from scratch and compares it with the expected value.
"""

import random
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Callable, Optional

import structlog
import sympy
from sympy.polys.domains import QQ

from src.algebra.groebner import (
    groebner_basis,
    ideal_equal,
    ideal_intersect,
    ideal_member,
    is_groebner,
    is_reduced,
    profile,
    vanishing_ideal,
)
from src.algebra.hilbert import VarietyProfile
from src.algebra.multipoly import (
    GREVLEX,
    GRLEX,
    MonomialOrder,
    Poly,
    evaluate,
    monic,
    monomials_of_degree,
)
from src.bounds.cases import gl3_case_bounds
from src.bounds.formulas import (
    A_bound,
    headline_bound,
    product_bound,
    product_bound_precise,
    schur_J,
    unipotent_bound,
)
from src.config import ConeStrategy, get_settings
from src.envelope.algorithm import EnvelopeBoundResult, algorithm1
from src.envelope.classification import classify_gl2_profile
from src.envelope.cone import cone_ideal
from src.envelope.examples import run_example
from src.errors import ParameterError, WorkbenchError
from src.groups.catalog import SL2_CATALOG, named_group
from src.groups.matgroup import determinants
from src.groups.matrices import CycMatrix
from src.models.schemas import VerifyCaseResult
from src.tools.errors import error_report

logger = structlog.get_logger(__name__)

CATALOG_D = {"binary-tetrahedral": 3, "binary-octahedral": 4, "binary-icosahedral": 6}
CATALOG_ORDERS = {"binary-tetrahedral": 24, "binary-octahedral": 48, "binary-icosahedral": 120}
CROSS_CHECK_GROUPS = (
    "cyclic-1",
    "cyclic-2",
    "cyclic-3",
    "cyclic-4",
    "cyclic-5",
    "cyclic-6",
    "binary-dihedral-2",
    "binary-dihedral-3",
)
ORACLE_SEEDS = 20
SYMPY_ORACLE_SEEDS = 8

CaseOutcome = tuple[str, str, bool]


@lru_cache(maxsize=None)
def _catalog_result(tag: str, order_name: str) -> EnvelopeBoundResult:
    order = GRLEX if order_name == "grlex" else GREVLEX
    return algorithm1(named_group(tag), order=order)


def _d_values(order_name: str) -> dict[str, int]:
    return {tag: _catalog_result(tag, order_name).d for tag in SL2_CATALOG}


# =============================================================================
# Cases
# =============================================================================


def case_algorithm1() -> CaseOutcome:
    actual = _d_values("grlex")
    return str(CATALOG_D), str(actual), actual == CATALOG_D


def case_icosahedral_degree() -> CaseOutcome:
    result = _catalog_result("binary-icosahedral", "grlex")
    p = result.profile
    passed = p.dimension == 1 and p.degree <= 60 and p.degree == result.num_lines
    actual = f"dimension={p.dimension} degree={p.degree} lines={result.num_lines}"
    return "dimension=1 degree=lines<=60", actual, passed


def case_catalog_orders() -> CaseOutcome:
    minus_one = CycMatrix.of([[-1, 0], [0, -1]])
    orders = {}
    passed = True
    for tag in SL2_CATALOG:
        group = named_group(tag)
        orders[tag] = group.order
        passed = passed and all(d == 1 for d in determinants(group)) and minus_one in group
    passed = passed and orders == CATALOG_ORDERS
    return f"{CATALOG_ORDERS}, det 1, -I present", str(orders), passed


def case_example_degrees() -> CaseOutcome:
    settings = get_settings()
    plan = {
        "roots": range(2, settings.max_roots_param + 1),
        "torus": range(1, settings.max_torus_param + 1),
        "dihedral": range(2, settings.max_dihedral_param + 1),
        "permutation": range(2, settings.max_permutation_param + 1),
    }
    failures = [
        f"{name}({param})"
        for name, params in plan.items()
        for param in params
        if not run_example(name, param).matches
    ]
    return "every example matches", ", ".join(failures) or "all match", not failures


def case_bound_table() -> CaseOutcome:
    checks = {
        "headline(1,2,3)": (tuple(headline_bound(n) for n in (1, 2, 3)), (1, 6, 360)),
        "A(1,2,3)": (tuple(A_bound(n).exact for n in (1, 2, 3)), (2, 6, 12)),
        "schur_J(2)": (schur_J(2).value, 384064),
        "product(9,2,3)": (product_bound(9, 2, 3), 144),
        "product_precise(60,1,(2,1))": (product_bound_precise(60, 1, (2, 1)), 240),
        "unipotent(2,3,4)": (tuple(unipotent_bound(n) for n in (2, 3, 4)), (1, 2, 12)),
        "gl3 cases": (tuple(c.value for c in gl3_case_bounds()), (144, 240, 243, 360, 6)),
    }
    wrong = [name for name, (got, want) in checks.items() if got != want]
    return "all bound values reproduced", ", ".join(wrong) or "all reproduced", not wrong


def _random_points(rng: random.Random, nvars: int) -> list[tuple[int, ...]]:
    count = rng.randint(1, 4)
    points: set[tuple[int, ...]] = set()
    while len(points) < count:
        points.add(tuple(rng.randint(-2, 2) for _ in range(nvars)))
    return sorted(points)


def _random_poly(rng: random.Random, nvars: int) -> Poly:
    monos = [m for d in range(4) for m in monomials_of_degree(nvars, d)]
    return Poly.from_terms(nvars, [(m, rng.randint(-3, 3)) for m in rng.sample(monos, 3)])


def oracle_check(seed: int) -> Optional[str]:
    """One randomized Groebner property check; returns a failure message or None."""
    rng = random.Random(seed)
    nvars = rng.randint(1, 3)
    first, second = _random_points(rng, nvars), _random_points(rng, nvars)
    ideal = vanishing_ideal(first)
    basis = list(ideal.groebner())

    if not (is_groebner(basis, GRLEX) and is_reduced(basis, GRLEX)):
        return "basis not reduced"
    if groebner_basis(basis, GRLEX) != basis:
        return "basis not idempotent"
    if profile(ideal) != VarietyProfile(0, len(first)):
        return "point count wrong"
    for f in (_random_poly(rng, nvars), _random_poly(rng, nvars) * basis[0]):
        vanishes = all(evaluate(f, p).is_zero() for p in first)
        if ideal_member(f, ideal) != vanishes:
            return "membership disagrees with evaluation"
    union = sorted(set(first) | set(second))
    meet = ideal_intersect(ideal, vanishing_ideal(second))
    if not ideal_equal(meet, vanishing_ideal(union)):
        return "intersection is not the union's ideal"
    return None


def _random_generator(rng: random.Random, nvars: int) -> Poly:
    max_degree = 3 if nvars == 2 else 2
    monos = [m for d in range(1, max_degree + 1) for m in monomials_of_degree(nvars, d)]
    chosen = rng.sample(monos, rng.randint(2, 3))
    return Poly.from_terms(nvars, [(m, rng.choice([-3, -2, -1, 1, 2, 3])) for m in chosen])


def sympy_oracle_check(seed: int, order_name: str = "grlex") -> Optional[str]:
    """
    Compare Buchberger against ``sympy.groebner`` on a random polynomial ideal.

    Returns:
        A failure message, or None when the reduced bases agree
    """
    rng = random.Random(seed)
    nvars = rng.randint(2, 3)
    gens = [_random_generator(rng, nvars) for _ in range(rng.randint(2, 5 - nvars))]
    order = MonomialOrder.from_name(order_name)

    basis = groebner_basis(gens, order)
    if not (is_groebner(basis, order) and is_reduced(basis, order)):
        return "basis not reduced"
    if groebner_basis(basis, order) != basis:
        return "basis not idempotent"

    symbols = sympy.symbols(f"v0:{nvars}")
    as_sympy = [
        sympy.Poly.from_dict({m: c.coeffs[0] for m, c in g.terms.items()}, *symbols, domain=QQ)
        for g in gens
    ]
    reference = sympy.groebner(as_sympy, *symbols, order=order_name, domain=QQ)
    expected = [monic(Poly.from_terms(nvars, g.terms()), order) for g in reference.polys]

    def by_lead(p: Poly) -> tuple:
        return order.key(p.leading_monomial(order))

    if sorted(basis, key=by_lead) != sorted(expected, key=by_lead):
        return "basis differs from sympy"
    return None


def case_groebner_oracle() -> CaseOutcome:
    failures = [f"seed {s}: {msg}" for s in range(ORACLE_SEEDS) if (msg := oracle_check(s))]
    failures += [
        f"polynomial seed {s} ({name}): {msg}"
        for s in range(SYMPY_ORACLE_SEEDS)
        for name in ("grlex", "grevlex")
        if (msg := sympy_oracle_check(s, name))
    ]
    expected = (
        f"{ORACLE_SEEDS} random point ideals and {SYMPY_ORACLE_SEEDS} random polynomial "
        "ideals pass"
    )
    return expected, "; ".join(failures) or "all pass", not failures


def case_strategy_cross_validation() -> CaseOutcome:
    differ = []
    for tag in CROSS_CHECK_GROUPS:
        group = named_group(tag)
        by_lines = cone_ideal(group, strategy=ConeStrategy.INTERSECTION, order=GRLEX)
        by_points = cone_ideal(
            group, strategy=ConeStrategy.INTERPOLATION, order=GRLEX, cross_check_max_lines=0
        )
        if not ideal_equal(by_lines.ideal, by_points.ideal):
            differ.append(tag)
    return "both constructions agree", ", ".join(differ) or "all agree", not differ


def case_gl2_classification() -> CaseOutcome:
    labels = {}
    for tag in SL2_CATALOG:
        p = _catalog_result(tag, "grlex").profile
        labels[tag] = classify_gl2_profile(p.dimension, p.degree)
    passed = all(label is not None for label in labels.values())
    return "every profile falls in a row", str(labels), passed


def case_order_independence() -> CaseOutcome:
    grlex, grevlex = _d_values("grlex"), _d_values("grevlex")
    return str(grlex), str(grevlex), grlex == grevlex


CASES: dict[str, Callable[[], CaseOutcome]] = {
    "algorithm1-catalog": case_algorithm1,
    "icosahedral-degree": case_icosahedral_degree,
    "catalog-orders": case_catalog_orders,
    "example-degrees": case_example_degrees,
    "bound-table": case_bound_table,
    "groebner-oracle": case_groebner_oracle,
    "strategy-cross-validation": case_strategy_cross_validation,
    "gl2-classification": case_gl2_classification,
    "order-independence": case_order_independence,
}


def run_case(name: str) -> dict:
    """Run one acceptance case; computation errors count as failures."""
    try:
        expected, actual, passed = CASES[name]()
    except WorkbenchError as exc:
        expected, actual, passed = "no error", f"{type(exc).__name__}: {exc}", False
    result = VerifyCaseResult(case=name, expected=expected, actual=actual, passed=passed)
    log = logger.info if passed else logger.warning
    log("Verify case finished", case=name, passed=passed)
    return result.model_dump()


def run_verify(workers: Optional[int] = None, cases: Optional[list[str]] = None) -> dict:
    """
    Run the acceptance suite.

    Args:
        workers: Process pool size; 1 runs sequentially. Defaults from settings
        cases: Subset of case names; defaults to all

    Returns:
        Dictionary with one row per case and an overall ``passed`` flag
    """
    workers = workers or get_settings().verify_workers
    names = list(cases or CASES)
    unknown = [n for n in names if n not in CASES]
    if unknown:
        return error_report(
            ParameterError(f"unknown verify cases: {', '.join(unknown)}"), field="cases"
        )
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run_case, names))
    else:
        rows = [run_case(name) for name in names]
    return {"cases": rows, "passed": all(r["passed"] for r in rows)}
