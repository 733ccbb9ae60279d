"""
Exact Algebra Package
"""

from src.algebra.exactnum import ONE, ZERO, CycNum, root_of_unity
from src.algebra.groebner import (
    Ideal,
    eliminate,
    groebner_basis,
    ideal_equal,
    ideal_intersect,
    ideal_member,
    profile,
    radical_member,
)
from src.algebra.hilbert import VarietyProfile, hilbert_profile
from src.algebra.multipoly import GREVLEX, GRLEX, LEX, MonomialOrder, Poly, parse_poly

__all__ = [
    # Cyclotomic numbers
    "CycNum",
    "ONE",
    "ZERO",
    "root_of_unity",
    # Polynomials
    "Poly",
    "MonomialOrder",
    "GRLEX",
    "GREVLEX",
    "LEX",
    "parse_poly",
    # Ideals
    "Ideal",
    "groebner_basis",
    "ideal_member",
    "radical_member",
    "eliminate",
    "ideal_intersect",
    "ideal_equal",
    "profile",
    # Hilbert route
    "VarietyProfile",
    "hilbert_profile",
]
