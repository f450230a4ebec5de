"""
Elementary divisors over the localization of Z at ℓ and over Z.

``smith_local`` diagonalizes by row and column operations whose
multipliers are ℓ-integral; only the valuations of the resulting
diagonal matter, since units of the local ring are invisible in the
cokernel. ``cokernel_integer`` uses sympy's integer Smith normal form.
"""

import logging
from fractions import Fraction
from typing import List, Sequence

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from weilgroups.arith import ord_ell, require_prime
from weilgroups.errors import InvalidArgumentError, NotLocalError, SingularMatrixError
from weilgroups.groups import group_from_invariant_factors
from weilgroups.models import ElementaryDivisors, GroupType, LocalGroupType, LocalMatrix

logger = logging.getLogger(__name__)


def smith_local(matrix: LocalMatrix) -> ElementaryDivisors:
    """
    Ascending ℓ-valuations of the elementary divisors of ``matrix``.

    Pivot is the entry of minimal valuation in the remaining block, ties
    broken row-major. The exponents sum to ord_ℓ(det).

    Raises:
        SingularMatrixError: if the matrix is singular.
    """
    ell = matrix.prime
    rows = matrix.to_lists()
    d = matrix.dim
    exponents: List[int] = []
    for k in range(d):
        best = None
        pivot = (k, k)
        for i in range(k, d):
            for j in range(k, d):
                if rows[i][j] == 0:
                    continue
                v = ord_ell(rows[i][j], ell)
                if best is None or v < best:
                    best, pivot = v, (i, j)
        if best is None:
            raise SingularMatrixError(f"singular matrix: rank {k} < {d}", prime=ell)
        i, j = pivot
        rows[k], rows[i] = rows[i], rows[k]
        for row in rows:
            row[k], row[j] = row[j], row[k]
        p = rows[k][k]
        for i in range(k + 1, d):
            factor = rows[i][k] / p
            if factor:
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[k])]
        # column operations only touch row k once column k is cleared below the pivot
        for j in range(k + 1, d):
            rows[k][j] = Fraction(0)
        exponents.append(best)
    logger.debug("smith_local at %d: pivot valuations %s", ell, exponents)
    return ElementaryDivisors(prime=ell, exponents=tuple(sorted(exponents)))


def _integer_domain_matrix(rows: Sequence[Sequence[int]]) -> DomainMatrix:
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise InvalidArgumentError("matrix must be square and nonempty")
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in rows], (n, n), ZZ)


def _rational_domain_matrix(rows: Sequence[Sequence[Fraction]]) -> DomainMatrix:
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise InvalidArgumentError("matrix must be square and nonempty")
    return DomainMatrix(
        [[QQ(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in rows],
        (n, n),
        QQ,
    )


def _to_fractions(matrix: DomainMatrix) -> List[List[Fraction]]:
    dense = matrix.to_Matrix()
    return [
        [Fraction(int(dense[i, j].p), int(dense[i, j].q)) for j in range(dense.cols)]
        for i in range(dense.rows)
    ]


def cokernel_integer(rows: Sequence[Sequence[int]]) -> GroupType:
    """
    Z^d modulo the column span of an integer matrix, split into primary
    components.

    Raises:
        SingularMatrixError: if det = 0.
    """
    matrix = _integer_domain_matrix(rows)
    if matrix.det() == 0:
        raise SingularMatrixError("singular matrix: the cokernel is infinite")
    factors = [abs(int(x)) for x in invariant_factors(matrix)]
    return group_from_invariant_factors(factors)


def lattice_cokernel(
    action: Sequence[Sequence[int]], basis: Sequence[Sequence[int]], ell: int
) -> LocalGroupType:
    """
    Cokernel of E on the lattice T spanned by the columns of ``basis``.

    E restricted to T has matrix X = H^(-1) E H in the basis H.

    Raises:
        NotLocalError: if X is not ℓ-integral, i.e. T is not E-invariant
            over the localization at ℓ.
    """
    require_prime(ell)
    h = _integer_domain_matrix(basis)
    e = _integer_domain_matrix(action)
    if h.det() == 0:
        raise SingularMatrixError("lattice basis is singular")
    hq = h.convert_to(QQ)
    x = hq.inv().matmul(e.convert_to(QQ)).matmul(hq)
    rows = _to_fractions(x)
    if any(entry.denominator % ell == 0 for row in rows for entry in row):
        raise NotLocalError(f"lattice is not invariant over the localization at {ell}", prime=ell)
    restricted = LocalMatrix(prime=ell, rows=rows)
    return smith_local(restricted).cokernel()


def characteristic_polynomial(matrix: LocalMatrix) -> List[Fraction]:
    """Ascending coefficients of det(t - M), exact."""
    coeffs = _rational_domain_matrix(matrix.rows).charpoly()
    return [Fraction(int(QQ.numer(c)), int(QQ.denom(c))) for c in reversed(coeffs)]


def determinant(rows: Sequence[Sequence[int]]) -> int:
    return int(_integer_domain_matrix(rows).det())
