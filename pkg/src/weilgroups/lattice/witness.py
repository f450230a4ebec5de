"""
Explicit witness lattices.

For f(t) = a_0 + a_1 t + ... + a_d t^d with a_d an ℓ-unit and a target
ℓ-group ⊕ Z/ℓ^(m_s) (m_1 <= ... <= m_d, zero-padded, Σ m_s = ord_ℓ(a_0)),
put M(s) = m_1 + ... + m_s and, in Q_ℓ[x]/(f),

    v_s = (a_d x^s + a_(d-1) x^(s-1) + ... + a_(d-s)) / ℓ^M(s),  0 <= s < d.

When ℓ^M(s) divides a_(d-s) for every s, the v_s span a lattice T stable
under multiplication by x, with

    x v_(s-1) = ℓ^(m_s) (v_s - u_s v_0),   u_s = a_(d-s) / (a_d ℓ^M(s)),

(v_d = 0), and T / xT is the requested group. The divisibility holds
exactly when Np_ℓ(f) lies on or above the Hodge polygon of the group.
"""

import logging
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Union

from weilgroups.arith import is_ell_unit, ord_ell, require_prime
from weilgroups.errors import (
    ConstantTermError,
    InvalidArgumentError,
    MultipleRootsError,
    PolygonConditionError,
)
from weilgroups.lattice.smith import characteristic_polynomial, smith_local
from weilgroups.models import LocalGroupType, LocalMatrix, WitnessBasis
from weilgroups.polynomials import IntPoly, is_squarefree

logger = logging.getLogger(__name__)

Partition = Union[LocalGroupType, Sequence[int]]


def _padded_exponents(m: Partition, ell: int, d: int) -> List[int]:
    group = m if isinstance(m, LocalGroupType) else LocalGroupType(prime=ell, parts=tuple(m))
    if group.prime != ell:
        raise InvalidArgumentError(f"group is an {group.prime}-group, expected {ell}")
    return list(group.padded(d))


def witness_basis(f: IntPoly, m: Partition, ell: int) -> WitnessBasis:
    """
    Exponents, partial sums M(0..d) and corrections u_1..u_d of the witness
    lattice for f and the group with exponents m.

    Raises:
        ConstantTermError: if f(0) = 0.
        InvalidArgumentError: if the leading coefficient is not an ℓ-unit
            or Σ m_s differs from ord_ℓ(f(0)).
        PolygonConditionError: if ℓ^M(s) does not divide a_(d-s).
    """
    require_prime(ell)
    d = f.degree
    if d < 1:
        raise InvalidArgumentError("witness lattices need deg f >= 1")
    a = f.coeffs
    if a[0] == 0:
        raise ConstantTermError("constant term vanishes", polynomial=f.to_text())
    if not is_ell_unit(a[d], ell):
        raise InvalidArgumentError(f"leading coefficient {a[d]} is not an {ell}-unit")
    exponents = _padded_exponents(m, ell, d)
    if sum(exponents) != ord_ell(a[0], ell):
        raise InvalidArgumentError(
            f"exponents sum to {sum(exponents)} but ord_{ell}(f(0)) = {ord_ell(a[0], ell)}"
        )

    partial = [0]
    for e in exponents:
        partial.append(partial[-1] + e)
    corrections = []
    for s in range(1, d + 1):
        coefficient = a[d - s]
        if coefficient % ell ** partial[s]:
            raise PolygonConditionError(
                f"polygon condition violated at s={s}: {ell}^{partial[s]} does not divide a_{d - s} = {coefficient}",
                s=s,
                prime=ell,
            )
        corrections.append(Fraction(coefficient, a[d] * ell ** partial[s]))
    return WitnessBasis(
        prime=ell,
        exponents=tuple(exponents),
        partial_sums=tuple(partial),
        corrections=tuple(corrections),
    )


def witness_matrix(f: IntPoly, m: Partition, ell: int) -> LocalMatrix:
    """
    Matrix of multiplication by x on the witness lattice in the basis
    v_0, ..., v_(d-1). Column s-1 has ℓ^(m_s) in row s (s < d) and
    -ℓ^(m_s) u_s in row 0.

    Example:
        t^2 + 8, m = (1, 2), ℓ = 2  ->  [[0, -4], [2, 0]]
    """
    basis = witness_basis(f, m, ell)
    d = f.degree
    rows = [[Fraction(0)] * d for _ in range(d)]
    for s in range(1, d + 1):
        scale = ell ** basis.exponents[s - 1]
        if s < d:
            rows[s][s - 1] = Fraction(scale)
        rows[0][s - 1] = -scale * basis.corrections[s - 1]
    return LocalMatrix(prime=ell, rows=rows)


def verify_witness(f_shifted: IntPoly, m: Partition, ell: int) -> bool:
    """True iff the witness lattice for ``m`` has cokernel exactly ``m``."""
    if not is_squarefree(f_shifted):
        raise MultipleRootsError("witness construction requires no multiple roots")
    expected = _padded_exponents(m, ell, f_shifted.degree)
    matrix = witness_matrix(f_shifted, m, ell)
    divisors = smith_local(matrix)
    logger.debug("witness at %d for %s: divisors %s", ell, expected, divisors.exponents)
    return list(divisors.exponents) == expected


def witness_transcript(f_shifted: IntPoly, m: Partition, ell: int) -> Dict[str, Any]:
    """Basis data, matrix, Smith reduction and checks for the CLI."""
    basis = witness_basis(f_shifted, m, ell)
    matrix = witness_matrix(f_shifted, m, ell)
    divisors = smith_local(matrix)
    charpoly = characteristic_polynomial(matrix)
    monic = [Fraction(c, f_shifted.leading_coefficient) for c in f_shifted.coeffs]
    return {
        "polynomial": f_shifted.to_text(),
        "basis": basis.to_dict(),
        "matrix": matrix.to_dict(),
        "elementary_divisors": list(divisors.exponents),
        "charpoly_matches": charpoly == monic,
        "verified": list(divisors.exponents) == list(basis.exponents),
    }
