"""
Newton polygons of integer polynomials, Hodge polygons of finite abelian
ℓ-groups, and the "lies on or above" comparison between them.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from weilgroups.arith import ord_ell, require_prime
from weilgroups.errors import (
    ConstantTermError,
    InvalidArgumentError,
    SpanMismatchError,
    TooManyGeneratorsError,
    UndefinedError,
)
from weilgroups.models import ConvexPolygon, LocalGroupType
from weilgroups.polynomials import IntPoly

Point = Tuple[int, Fraction]


def _lower_hull(points: List[Point]) -> List[Point]:
    """Andrew's monotone chain, lower half; collinear points are dropped."""
    hull: List[Point] = []
    for point in points:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            # keep hull[-1] only if it lies strictly below the chord hull[-2] -> point
            if (y1 - y0) * (point[0] - x0) < (point[1] - y0) * (x1 - x0):
                break
            hull.pop()
        hull.append(point)
    return hull


def newton_polygon(poly: IntPoly, ell: int) -> ConvexPolygon:
    """
    Lower convex hull of the points (i, ord_ℓ(Q_i)) over nonzero coefficients.

    Zero coefficients contribute no point. The endpoints are
    (0, ord_ℓ(Q_0)) and (d, ord_ℓ(Q_d)).

    Raises:
        UndefinedError: for the zero polynomial.
        ConstantTermError: if Q(0) = 0.
        NotPrimeError: if ℓ is not prime.
    """
    require_prime(ell)
    if poly.is_zero:
        raise UndefinedError("undefined: Newton polygon of the zero polynomial")
    if poly.constant_term == 0:
        raise ConstantTermError("constant term vanishes", polynomial=poly.to_text())
    points = [(i, Fraction(ord_ell(c, ell))) for i, c in enumerate(poly.coeffs) if c != 0]
    return ConvexPolygon(vertices=_lower_hull(points))


def hodge_polygon(parts: Sequence[int], r: int) -> ConvexPolygon:
    """
    Hodge polygon of ⊕ Z/ℓ^(m_i) padded to r summands: vertices
    (i, m_1 + ... + m_(r-i)) for 0 <= i <= r, slopes -m_r, ..., -m_1.

    Raises:
        TooManyGeneratorsError: if more than r exponents are nonzero.
    """
    if r < 1:
        raise InvalidArgumentError(f"r must be positive, got {r}")
    nonzero = sorted(m for m in parts if m != 0)
    if any(m < 0 for m in nonzero):
        raise InvalidArgumentError(f"negative exponent in {list(parts)}")
    if len(nonzero) > r:
        raise TooManyGeneratorsError(
            f"group not generated by {r} elements", parts=tuple(nonzero), r=r
        )
    padded = [0] * (r - len(nonzero)) + nonzero
    vertices = [(i, Fraction(sum(padded[: r - i]))) for i in range(r + 1)]
    return ConvexPolygon(vertices=vertices)


def hodge_polygon_of_group(group: LocalGroupType, r: int) -> ConvexPolygon:
    return hodge_polygon(group.parts, r)


def _check_spans(upper: ConvexPolygon, lower: ConvexPolygon) -> None:
    if upper.width != lower.width:
        raise SpanMismatchError(
            f"polygons span [0, {upper.width}] and [0, {lower.width}]",
            upper=upper.width,
            lower=lower.width,
        )


def first_violation(upper: ConvexPolygon, lower: ConvexPolygon) -> Optional[int]:
    """Smallest integer abscissa where ``upper`` dips below ``lower``, if any."""
    _check_spans(upper, lower)
    for x in range(upper.width + 1):
        if upper.value_at(x) < lower.value_at(x):
            return x
    return None


def lies_on_or_above(upper: ConvexPolygon, lower: ConvexPolygon) -> bool:
    """
    True iff ``upper`` is on or above ``lower`` at every integer abscissa of
    the common span. Both paths break only at integers, so this decides the
    comparison everywhere.
    """
    return first_violation(upper, lower) is None


def endpoints_match(a: ConvexPolygon, b: ConvexPolygon) -> bool:
    return a.left == b.left and a.right == b.right
