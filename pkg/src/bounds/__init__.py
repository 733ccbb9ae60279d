"""
Degree Bounds Package
"""

from src.bounds.formulas import (
    A_bound,
    bound_summary,
    component_bound,
    headline_bound,
    lower_bound_factorial,
    normalizer_bound,
    product_bound,
    product_bound_precise,
    product_factor,
    reductive_bound,
    schur_J,
    substitution_chain,
    tight_bound,
    unipotent_bezout_form,
    unipotent_bound,
)

__all__ = [
    "A_bound",
    "bound_summary",
    "component_bound",
    "headline_bound",
    "lower_bound_factorial",
    "normalizer_bound",
    "product_bound",
    "product_bound_precise",
    "product_factor",
    "reductive_bound",
    "schur_J",
    "substitution_chain",
    "tight_bound",
    "unipotent_bezout_form",
    "unipotent_bound",
]
