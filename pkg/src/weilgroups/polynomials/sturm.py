"""
Exact real-root counting with Sturm sequences.

Counts are of *distinct* real roots in a half-open interval ``(lower, upper]``;
``None`` stands for -∞ / +∞. All evaluation happens over exact rationals.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Union

from sympy import Poly, Rational, sturm

Bound = Optional[Union[int, Fraction]]


def sign_changes(values: Sequence) -> int:
    """Number of sign changes in a sequence, zeros skipped."""
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_sequence(poly: Poly) -> List[Poly]:
    """Sturm sequence of the squarefree part of ``poly`` (over QQ)."""
    return sturm(poly.sqf_part())


def _values_at(sequence: Sequence[Poly], x: Bound, side: int) -> List:
    if x is None:
        # sign at ±∞ is the sign of the leading term
        values = []
        for p in sequence:
            lc = p.LC()
            values.append(lc if side > 0 or p.degree() % 2 == 0 else -lc)
        return values
    point = Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else Rational(x)
    return [p.eval(point) for p in sequence]


def count_real_roots(poly: Poly, lower: Bound = None, upper: Bound = None) -> int:
    """
    Number of distinct real roots of ``poly`` in ``(lower, upper]``.

    A root sitting exactly on ``lower`` is not counted; one on ``upper`` is.
    """
    if poly.degree() <= 0:
        return 0
    sequence = sturm_sequence(poly)
    return sign_changes(_values_at(sequence, lower, -1)) - sign_changes(
        _values_at(sequence, upper, +1)
    )
