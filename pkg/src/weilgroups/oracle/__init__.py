"""
Brute-force enumeration of invariant sublattices, used to check the
polygon criterion independently.
"""

from weilgroups.oracle.sublattices import (
    SublatticeOracle,
    achievable_groups_bruteforce,
    companion_matrix,
    compare_with_criterion,
    diagonal_shapes,
    enumerate_invariant_sublattices,
    is_invariant,
    solve_in_basis,
)

__all__ = [
    "SublatticeOracle",
    "achievable_groups_bruteforce",
    "companion_matrix",
    "compare_with_criterion",
    "diagonal_shapes",
    "enumerate_invariant_sublattices",
    "is_invariant",
    "solve_in_basis",
]
