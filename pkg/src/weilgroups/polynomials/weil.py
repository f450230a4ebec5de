"""
Weil polynomial screening and the transforms the classification needs.

A Weil polynomial of a g-dimensional abelian variety over F_q is monic of
degree 2g, satisfies a_i = q^(g-i) * a_(2g-i) for 0 <= i <= g, and all of
its complex roots have absolute value sqrt(q). ``validate_weil`` checks
exactly these necessary conditions; existence of a variety with the given
polynomial (Honda-Tate) is not checked.
"""

import logging
from math import comb
from typing import List, Optional

from sympy import Poly, Symbol

from weilgroups.arith import prime_power
from weilgroups.errors import UndefinedError
from weilgroups.models import ClassifierSettings, Verdict, WeilReport
from weilgroups.polynomials.intpoly import IntPoly
from weilgroups.polynomials.sturm import count_real_roots

logger = logging.getLogger(__name__)

S = Symbol("s")


def substitute_one_minus_t(f: IntPoly) -> IntPoly:
    """
    Return g(t) = f(1 - t) by binomial expansion.

    Example:
        t^2 - b*t + q  ->  t^2 + (b - 2)*t + (1 - b + q)
    """
    coeffs = [0] * len(f.coeffs)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for k in range(i + 1):
            coeffs[k] += a * comb(i, k) * (-1) ** k
    return IntPoly(coeffs=tuple(coeffs))


def eval_at_one(f: IntPoly) -> int:
    """f(1); for a Weil polynomial this is the number of rational points."""
    return sum(f.coeffs)


def is_squarefree(f: IntPoly) -> bool:
    """True iff gcd(f, f') is a constant."""
    if f.is_zero:
        raise UndefinedError("undefined: squarefreeness of the zero polynomial")
    if f.degree == 0:
        return True
    poly = f.to_sympy()
    return poly.gcd(poly.diff()).degree() == 0


def satisfies_functional_equation(f: IntPoly, q: int) -> bool:
    """a_i == q^(g-i) * a_(2g-i) for 0 <= i <= g."""
    if f.degree % 2:
        return False
    g = f.degree // 2
    return all(f.coefficient(i) == q ** (g - i) * f.coefficient(2 * g - i) for i in range(g + 1))


def real_companion(f: IntPoly, q: int) -> Optional[IntPoly]:
    """
    The polynomial h of degree g with f(t) = t^g * h(t + q/t), or ``None``
    when f has no such representation (odd degree or functional equation
    fails).

    Roots of f on the circle |t| = sqrt(q) correspond to real roots of h
    in [-2 sqrt(q), 2 sqrt(q)].
    """
    if f.is_zero or not satisfies_functional_equation(f, q):
        return None
    g = f.degree // 2
    shift = IntPoly(coeffs=(q, 0, 1))
    remainder = f
    h = [0] * (g + 1)
    for k in range(g, -1, -1):
        c = remainder.coefficient(g + k)
        h[k] = c
        if c:
            remainder = remainder - (shift ** k * IntPoly.monomial(g - k)).scale(c)
    if not remainder.is_zero:
        return None
    return IntPoly(coeffs=tuple(h))


def roots_on_circle(f: IntPoly, q: int) -> Optional[bool]:
    """
    Decide exactly whether every complex root of f has absolute value sqrt(q).

    Returns ``None`` when f has no real companion polynomial (the question
    is then left undecided). Boundary roots s = ±2 sqrt(q), i.e. the real
    roots ±sqrt(q) of f, are handled without special cases because the
    test only compares s^2 with 4q.
    """
    h = real_companion(f, q)
    if h is None:
        return None
    if h.degree == 0:
        return True
    hs = Poly(list(reversed(h.coeffs)), S)
    squarefree = hs.sqf_part()
    if count_real_roots(squarefree) != squarefree.degree():
        return False
    # h(s) * h(-s) = R(s^2); a real root of h with s^2 > 4q is a root of R beyond 4q
    even = (hs * hs.compose(Poly(-S, S))).all_coeffs()
    r = Poly(even[::2], S)
    return count_real_roots(r, lower=4 * q) == 0


def physical_part_degree(f: IntPoly, p: int) -> int:
    """
    Number of p-adic unit roots of f, i.e. the degree d of the factor f_1 in
    f = f_1 * f_2 with f_2 ≡ t^(2g-d) mod p.
    """
    first_unit = next(i for i, c in enumerate(f.coeffs) if c % p != 0)
    return f.degree - first_unit


def validate_weil(
    f: IntPoly, q: int, settings: Optional[ClassifierSettings] = None
) -> WeilReport:
    """
    Screen a candidate Weil polynomial.

    Mathematical rejection is reported in the returned ``WeilReport``; this
    function does not raise for it. Squarefreeness is recorded but does not
    affect the verdict.
    """
    settings = settings or ClassifierSettings()
    notes: List[str] = ["Honda-Tate existence conditions are not checked"]
    reasons: List[str] = []

    factored = prime_power(q, bound=settings.max_q)
    p, e = factored if factored else (None, None)
    if factored is None:
        reasons.append(f"q={q} is not a prime power (or exceeds {settings.max_q})")

    degree = f.degree
    monic = f.is_monic
    even = not f.is_zero and degree > 0 and degree % 2 == 0
    if not monic:
        reasons.append("polynomial is not monic")
    if not even:
        reasons.append("degree must be even and positive")
    if degree > settings.max_degree:
        reasons.append(f"degree {degree} exceeds the configured maximum {settings.max_degree}")

    functional = even and satisfies_functional_equation(f, q)
    if even and not functional:
        reasons.append("functional equation a_i = q^(g-i) * a_(2g-i) fails")

    on_circle = roots_on_circle(f, q) if functional else None
    if on_circle is False:
        reasons.append("not all complex roots have absolute value sqrt(q)")

    squarefree = is_squarefree(f) if not f.is_zero else False
    order_n = eval_at_one(f)
    if not reasons and order_n <= 0:
        reasons.append(f"f(1) = {order_n} is not positive")

    p_rank_degree = None
    if p is not None and even and monic:
        p_rank_degree = physical_part_degree(f, p)

    verdict = Verdict.REJECTED if reasons else Verdict.ACCEPTED
    report = WeilReport(
        polynomial=f.to_text(),
        q=q,
        p=p,
        e=e,
        g=degree // 2 if even else None,
        monic=monic,
        functional_equation=functional,
        roots_on_circle=on_circle,
        squarefree=squarefree,
        order_n=order_n,
        p_rank_degree=p_rank_degree,
        honda_tate_checked=False,
        verdict=verdict,
        reason="; ".join(reasons) or None,
        notes=notes,
    )
    logger.debug("validate_weil(%s, q=%d) -> %s", f.to_text(), q, verdict.value)
    return report
