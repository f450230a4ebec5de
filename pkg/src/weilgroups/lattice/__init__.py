"""
Witness lattices and elementary divisors.
"""

from weilgroups.lattice.smith import (
    characteristic_polynomial,
    cokernel_integer,
    determinant,
    lattice_cokernel,
    smith_local,
)
from weilgroups.lattice.witness import (
    verify_witness,
    witness_basis,
    witness_matrix,
    witness_transcript,
)

__all__ = [
    "characteristic_polynomial",
    "cokernel_integer",
    "determinant",
    "lattice_cokernel",
    "smith_local",
    "verify_witness",
    "witness_basis",
    "witness_matrix",
    "witness_transcript",
]
