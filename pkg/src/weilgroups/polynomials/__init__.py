"""
Exact integer polynomials, the t -> 1 - t substitution and Weil screening.
"""

from weilgroups.polynomials.intpoly import IntPoly
from weilgroups.polynomials.sturm import count_real_roots, sign_changes, sturm_sequence
from weilgroups.polynomials.weil import (
    eval_at_one,
    is_squarefree,
    physical_part_degree,
    real_companion,
    roots_on_circle,
    satisfies_functional_equation,
    substitute_one_minus_t,
    validate_weil,
)

__all__ = [
    "IntPoly",
    "count_real_roots",
    "sign_changes",
    "sturm_sequence",
    "eval_at_one",
    "is_squarefree",
    "physical_part_degree",
    "real_companion",
    "roots_on_circle",
    "satisfies_functional_equation",
    "substitute_one_minus_t",
    "validate_weil",
]
