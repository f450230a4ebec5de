"""
Groups of points on elliptic curves over F_q with trace b.

With N = 1 - b + q, the group is Z/n1 + Z/n2 with n1 * n2 = N and n1 | n2.
For b^2 != 4q such a group occurs iff n1 divides b - 2; for b = ±2 sqrt(q)
Frobenius acts on the Tate module as the scalar b/2 and the group is
forced to be (Z/n1)^2.
"""

import logging
from typing import List

from sympy import divisors

from weilgroups.arith import exact_root, prime_power
from weilgroups.errors import InvalidArgumentError, NotWeilPolynomialError
from weilgroups.groups import group_from_invariant_factors
from weilgroups.models import EllipticClassification, GroupType

logger = logging.getLogger(__name__)


def elliptic_classification(q: int, b: int) -> EllipticClassification:
    """
    Raises:
        InvalidArgumentError: if q is not a prime power.
        NotWeilPolynomialError: if b^2 > 4q.
    """
    if q < 2 or prime_power(q) is None:
        raise InvalidArgumentError(f"q={q} is not a prime power", q=q)
    if b * b > 4 * q:
        raise NotWeilPolynomialError(
            f"not a Weil polynomial: b^2 = {b * b} exceeds 4q = {4 * q}", q=q, b=b
        )
    n = 1 - b + q

    if b * b == 4 * q:
        n1 = exact_root(n, 2)
        if n1 is None:
            return EllipticClassification(
                q=q,
                b=b,
                order_n=n,
                supersingular_double_root=True,
                groups=(),
                note=f"N = {n} is not a perfect square",
            )
        return EllipticClassification(
            q=q,
            b=b,
            order_n=n,
            supersingular_double_root=True,
            groups=(group_from_invariant_factors([n1, n1]),),
        )

    groups = []
    for n1 in divisors(n):
        if n % (n1 * n1) or (b - 2) % n1:
            continue
        groups.append(group_from_invariant_factors([n1, n // n1]))
    logger.debug("elliptic q=%d b=%d N=%d: %d groups", q, b, n, len(groups))
    return EllipticClassification(
        q=q, b=b, order_n=n, supersingular_double_root=False, groups=tuple(groups)
    )


def elliptic_groups(q: int, b: int) -> List[GroupType]:
    """Groups Z/n1 + Z/n2 of points on curves with Weil polynomial t^2 - b*t + q."""
    return list(elliptic_classification(q, b).groups)
