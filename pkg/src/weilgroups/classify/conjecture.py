"""
Candidate ℓ-parts for a Weil polynomial with multiple roots.

Given a nested factorisation f = f_1 * ... * f_s with f_j | f_(j-1) and
every f_j squarefree, each f_j carries its own polygon test at width
deg f_j; the candidate set is all direct sums G_1 + ... + G_s of groups
passing those tests. Every such sum does occur, but the converse is
only known for simple abelian surfaces and fails in general (see
``weilgroups.fixtures.counterexample_matrix``), so results outside
those cases are marked conjectural.
"""

import itertools
import logging
from typing import List, Optional, Sequence

from weilgroups.arith import require_prime
from weilgroups.classify.classifier import accepted_weil_report, criterion_local_groups, infer_q
from weilgroups.errors import (
    FactorsNotNestedError,
    InvalidArgumentError,
    MultipleRootsError,
    PolynomialFormatError,
    RejectedWeilPolynomialError,
)
from weilgroups.groups import direct_sum_local
from weilgroups.models import ConjectureResult, LocalGroupType
from weilgroups.polynomials import IntPoly, is_squarefree, substitute_one_minus_t, validate_weil

logger = logging.getLogger(__name__)

PROVED_NOTE = "single factor: the polygon criterion is exact"
SURFACE_NOTE = "simple abelian surface: the direct-sum description is proved in this case"
CONJECTURAL_NOTE = (
    "CONJECTURAL: asserted only when deg f_j <= 2 for all j, and false in general"
)


def _product(factors: Sequence[IntPoly]) -> IntPoly:
    result = IntPoly.monomial(0)
    for factor in factors:
        result = result * factor
    return result


def _check_nested(factors: Sequence[IntPoly]) -> None:
    for j, factor in enumerate(factors):
        if factor.is_zero or not is_squarefree(factor):
            raise MultipleRootsError(f"factor f_{j + 1} = {factor} has multiple roots")
    for j in range(1, len(factors)):
        try:
            factors[j - 1].divmod_exact(factors[j])
        except PolynomialFormatError:
            raise FactorsNotNestedError(
                f"factors not nested: f_{j + 1} = {factors[j]} does not divide f_{j} = {factors[j - 1]}"
            )


def _is_simple_surface(factors: Sequence[IntPoly]) -> bool:
    """f = h^2 with h irreducible of degree 2."""
    if len(factors) != 2 or factors[0] != factors[1] or factors[0].degree != 2:
        return False
    return bool(factors[0].to_sympy().is_irreducible)


def conjecture_local_groups(
    factors: Sequence[IntPoly], ell: int, q: Optional[int] = None
) -> ConjectureResult:
    """
    Direct sums ⊕ G_j where each G_j has order ℓ^(ord_ℓ(f_j(1))) and passes
    the polygon test against Np_ℓ(f_j(1 - t)) at width deg f_j.

    Raises:
        FactorsNotNestedError: if some f_j does not divide f_(j-1).
        MultipleRootsError: if some f_j is not squarefree.
        RejectedWeilPolynomialError: if the product is not a Weil polynomial.
    """
    require_prime(ell)
    factors = list(factors)
    if not factors:
        raise InvalidArgumentError("at least one factor is required")
    _check_nested(factors)

    f = _product(factors)
    q = infer_q(f) if q is None else q
    if len(factors) == 1:
        accepted_weil_report(f, q)
    else:
        report = validate_weil(f, q)
        if not report.accepted:
            raise RejectedWeilPolynomialError(
                f"product of factors is not a Weil polynomial for q={q}: {report.reason}",
                polynomial=f.to_text(),
            )

    per_factor: List[List[LocalGroupType]] = [
        criterion_local_groups(substitute_one_minus_t(factor), ell) for factor in factors
    ]
    seen = set()
    groups: List[LocalGroupType] = []
    for combination in itertools.product(*per_factor):
        total = LocalGroupType(prime=ell)
        for part in combination:
            total = direct_sum_local(total, part)
        if total not in seen:
            seen.add(total)
            groups.append(total)
    groups.sort(key=lambda g: (g.rank, g.parts))

    proved = len(factors) == 1
    deg_bound_holds = all(factor.degree <= 2 for factor in factors)
    if proved:
        conjectural, note = False, PROVED_NOTE
    elif _is_simple_surface(factors):
        conjectural, note = False, SURFACE_NOTE
    else:
        conjectural, note = True, CONJECTURAL_NOTE
    logger.debug("conjecture at %d over %d factors: %d groups", ell, len(factors), len(groups))
    return ConjectureResult(
        prime=ell,
        factors=tuple(factor.to_text() for factor in factors),
        groups=tuple(groups),
        conjectural=conjectural,
        proved=proved,
        deg_bound_holds=deg_bound_holds,
        note=note,
    )
