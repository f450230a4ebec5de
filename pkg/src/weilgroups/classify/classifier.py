"""
Groups of points in an isogeny class with squarefree Weil polynomial f.

An abelian group G of order f(1) occurs as A(k) for some A in the class
exactly when, for every prime ℓ, the Newton polygon of f(1 - t) at ℓ lies
on or above the Hodge polygon of the ℓ-part of G padded to deg f summands.
The test is local, so the realizable set is a Cartesian product over the
primes dividing f(1); ``iter_groups`` streams it lazily.

The prime ℓ = p needs no special path: the p-adic non-unit roots of f
contribute only zero slopes to Np_p(f(1 - t)), which absorb the
zero-padding of the Hodge polygon.
"""

import itertools
import logging
from typing import Iterator, List, Optional, Tuple

from weilgroups.arith import exact_root, ord_ell, prime_factorization, require_prime
from weilgroups.errors import MultipleRootsError, RejectedWeilPolynomialError
from weilgroups.groups import local_groups_of_order
from weilgroups.models import (
    ClassificationResult,
    ClassifierSettings,
    GroupType,
    LocalCandidate,
    LocalGroupType,
    LocalStatus,
    PrimeClassification,
    PrimeDiagnostic,
    RealizabilityReport,
    WeilReport,
)
from weilgroups.polygons import first_violation, hodge_polygon_of_group, newton_polygon
from weilgroups.polynomials import (
    IntPoly,
    eval_at_one,
    substitute_one_minus_t,
    validate_weil,
)

logger = logging.getLogger(__name__)


def infer_q(f: IntPoly) -> int:
    """Recover q from f(0) = q^g for a monic polynomial of degree 2g."""
    if f.degree == 0 or f.degree % 2:
        raise RejectedWeilPolynomialError(
            f"cannot infer q from a polynomial of degree {f.degree}", polynomial=f.to_text()
        )
    q = exact_root(f.constant_term, f.degree // 2)
    if q is None or q < 2:
        raise RejectedWeilPolynomialError(
            f"constant term {f.constant_term} is not a g-th power q^g with q >= 2",
            polynomial=f.to_text(),
        )
    return q


def accepted_weil_report(
    f: IntPoly, q: Optional[int] = None, settings: Optional[ClassifierSettings] = None
) -> WeilReport:
    """
    Validate f and require what the classification needs: an accepted
    Weil polynomial without multiple roots.
    """
    q = infer_q(f) if q is None else q
    report = validate_weil(f, q, settings)
    if not report.accepted:
        raise RejectedWeilPolynomialError(
            f"not a Weil polynomial for q={q}: {report.reason}", polynomial=f.to_text()
        )
    if not report.squarefree:
        raise MultipleRootsError("main theorem requires no multiple roots", polynomial=f.to_text())
    return report


def classify_at_prime(f_shifted: IntPoly, ell: int) -> PrimeClassification:
    """
    Polygon test at ℓ for every ℓ-group of order ℓ^(ord_ℓ(f_shifted(0)))
    generated by deg f_shifted elements.

    ``f_shifted`` is the polynomial whose Newton polygon is compared, i.e.
    f(1 - t) for a Weil polynomial f, or directly det(E - t) in the
    abstract lattice setting.
    """
    require_prime(ell)
    d = f_shifted.degree
    np = newton_polygon(f_shifted, ell)
    m = ord_ell(f_shifted.constant_term, ell)
    candidates = []
    for group in local_groups_of_order(ell, m, d):
        hp = hodge_polygon_of_group(group, d)
        x = first_violation(np, hp)
        candidates.append(
            LocalCandidate(group=group, hodge_polygon=hp, passes=x is None, first_failing_abscissa=x)
        )
    logger.debug(
        "prime %d: %d of %d candidates pass",
        ell,
        sum(c.passes for c in candidates),
        len(candidates),
    )
    return PrimeClassification(prime=ell, exponent=m, newton_polygon=np, candidates=tuple(candidates))


def criterion_local_groups(f_shifted: IntPoly, ell: int) -> List[LocalGroupType]:
    """ℓ-groups whose Hodge polygon lies on or below Np_ℓ(f_shifted)."""
    return classify_at_prime(f_shifted, ell).realizable


def realizable_local_groups(
    f: IntPoly,
    ell: int,
    q: Optional[int] = None,
    settings: Optional[ClassifierSettings] = None,
) -> List[LocalGroupType]:
    """
    ℓ-parts A(k)_ℓ that occur in the isogeny class of f.

    Raises:
        RejectedWeilPolynomialError: if f fails Weil screening.
        MultipleRootsError: if f is not squarefree.
    """
    require_prime(ell)
    accepted_weil_report(f, q, settings)
    return criterion_local_groups(substitute_one_minus_t(f), ell)


def is_realizable(
    f: IntPoly,
    group: GroupType,
    q: Optional[int] = None,
    settings: Optional[ClassifierSettings] = None,
) -> RealizabilityReport:
    """
    Decide whether ``group`` is a group of points in the isogeny class of f.

    A group of the wrong order yields a report with ``wrong_order=True``
    rather than an exception.
    """
    accepted_weil_report(f, q, settings)
    n = eval_at_one(f)
    if group.order != n:
        return RealizabilityReport(group=group, order_n=n, realizable=False, wrong_order=True)

    f_shifted = substitute_one_minus_t(f)
    d = f_shifted.degree
    diagnostics = []
    for ell in prime_factorization(n):
        local = group.local(ell)
        if local.rank > d:
            diagnostics.append(
                PrimeDiagnostic(prime=ell, group=local, status=LocalStatus.TOO_MANY_GENERATORS)
            )
            continue
        np = newton_polygon(f_shifted, ell)
        hp = hodge_polygon_of_group(local, d)
        x = first_violation(np, hp)
        if x is None:
            diagnostics.append(PrimeDiagnostic(prime=ell, group=local, status=LocalStatus.PASS))
        else:
            diagnostics.append(
                PrimeDiagnostic(
                    prime=ell,
                    group=local,
                    status=LocalStatus.POLYGON_FAILURE,
                    first_failing_abscissa=x,
                    newton_value=np.value_at(x),
                    hodge_value=hp.value_at(x),
                )
            )
    realizable = all(diag.status == LocalStatus.PASS for diag in diagnostics)
    return RealizabilityReport(
        group=group, order_n=n, realizable=realizable, diagnostics=tuple(diagnostics)
    )


def classify_all(
    f: IntPoly, q: int, settings: Optional[ClassifierSettings] = None
) -> ClassificationResult:
    """
    Classify the groups of points in the isogeny class of f over F_q.

    The full set is not materialized; ``total_count`` is the product of the
    per-prime counts and ``iter_groups`` enumerates it on demand.
    """
    report = accepted_weil_report(f, q, settings)
    f_shifted = substitute_one_minus_t(f)
    per_prime = tuple(classify_at_prime(f_shifted, ell) for ell in prime_factorization(report.order_n))
    total = 1
    for entry in per_prime:
        total *= len(entry.realizable)
    logger.debug("classify_all(%s, q=%d): %d groups", f.to_text(), q, total)
    return ClassificationResult(weil=report, per_prime=per_prime, total_count=total)


def iter_groups(result: ClassificationResult) -> Iterator[GroupType]:
    """Lazily enumerate the realizable groups (Cartesian product over primes)."""
    choices = [entry.realizable for entry in result.per_prime]
    for combination in itertools.product(*choices):
        yield GroupType(components=tuple(combination))


def take_groups(result: ClassificationResult, limit: int) -> Tuple[List[GroupType], bool]:
    """At most ``limit`` groups, plus whether the list was truncated."""
    groups = list(itertools.islice(iter_groups(result), limit))
    return groups, result.total_count > len(groups)
