"""
Tests for Weil polynomial screening.
"""

import math

import pytest

from weilgroups.errors import UndefinedError
from weilgroups.models import ClassifierSettings, Verdict
from weilgroups.polynomials import (
    IntPoly,
    eval_at_one,
    is_squarefree,
    physical_part_degree,
    real_companion,
    roots_on_circle,
    satisfies_functional_equation,
    validate_weil,
)

PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49]


def elliptic(b: int, q: int) -> IntPoly:
    return IntPoly(coeffs=(q, -b, 1))


def test_eval_at_one():
    assert eval_at_one(elliptic(2, 9)) == 8
    assert eval_at_one(IntPoly(coeffs=(81, 36, 6, 4, 1))) == 128
    assert eval_at_one(IntPoly(coeffs=(0,))) == 0


def test_accepts_ordinary_elliptic():
    """t^2 - 3t + 5 over F_5 has complex roots of modulus sqrt(5)."""
    report = validate_weil(elliptic(3, 5), 5)
    assert report.verdict == Verdict.ACCEPTED
    assert report.g == 1
    assert (report.p, report.e) == (5, 1)
    assert report.order_n == 3
    assert report.squarefree
    assert report.reason is None


def test_rejects_real_roots_off_circle():
    """t^2 - 5t + 5 has real roots with product 5 and sum 5."""
    report = validate_weil(elliptic(5, 5), 5)
    assert report.verdict == Verdict.REJECTED
    assert report.roots_on_circle is False
    assert "absolute value" in report.reason


def test_double_root_is_valid_but_not_squarefree(double_root):
    """(t - 3)^2 passes screening but is flagged as not squarefree."""
    report = validate_weil(double_root, 9)
    assert report.accepted
    assert not report.squarefree
    assert report.roots_on_circle is True
    assert report.order_n == 4


def test_rejects_q_not_prime_power():
    report = validate_weil(elliptic(1, 6), 6)
    assert not report.accepted
    assert report.p is None
    assert "not a prime power" in report.reason


def test_rejects_non_monic_and_odd_degree():
    non_monic = validate_weil(IntPoly(coeffs=(5, -3, 2)), 5)
    assert not non_monic.accepted
    assert "not monic" in non_monic.reason

    odd = validate_weil(IntPoly(coeffs=(3, 1)), 9)
    assert not odd.accepted
    assert "even" in odd.reason
    assert odd.g is None


def test_rejects_functional_equation_failure():
    report = validate_weil(IntPoly(coeffs=(5, 1, 1, 1, 1)), 5)
    assert not report.accepted
    assert not report.functional_equation
    assert report.roots_on_circle is None


def test_degree_limit_from_settings():
    surface = elliptic(1, 3) * elliptic(-2, 3)
    assert validate_weil(surface, 3).accepted
    limited = validate_weil(surface, 3, ClassifierSettings(max_degree=2))
    assert not limited.accepted
    assert "exceeds the configured maximum" in limited.reason


def test_report_records_unchecked_existence():
    """Existence of a variety is never checked and the report says so."""
    report = validate_weil(elliptic(3, 5), 5)
    assert report.honda_tate_checked is False
    assert any("Honda-Tate" in note for note in report.notes)
    assert report.to_dict()["order_n"] == "3"


def test_elliptic_sweep_matches_hasse_bound():
    """t^2 - bt + q is accepted iff b^2 <= 4q."""
    for q in PRIME_POWERS:
        bound = 2 * math.isqrt(4 * q) + 4
        for b in range(-bound, bound + 1):
            report = validate_weil(elliptic(b, q), q)
            assert report.accepted == (b * b <= 4 * q), f"q={q} b={b}"
            if report.accepted:
                assert report.order_n > 0


def test_surface_roots_off_circle():
    """t^4 - 10t^2 + 9 satisfies the functional equation for q=3 but has roots ±1, ±3."""
    f = IntPoly(coeffs=(9, 0, -10, 0, 1))
    assert satisfies_functional_equation(f, 3)
    assert real_companion(f, 3).coeffs == (-16, 0, 1)
    assert roots_on_circle(f, 3) is False


def test_real_companion_of_product():
    """(t^2 - 2t + 9)(t + 3)^2 = t^2 h(t + 9/t) with h = (s - 2)(s + 6)."""
    f = IntPoly(coeffs=(81, 36, 6, 4, 1))
    assert real_companion(f, 9).coeffs == (-12, 4, 1)
    assert roots_on_circle(f, 9) is True
    assert validate_weil(f, 9).accepted


def test_real_companion_missing():
    """Odd degree or no reciprocal factorization gives None."""
    assert real_companion(IntPoly(coeffs=(3, 1)), 9) is None
    assert roots_on_circle(IntPoly(coeffs=(5, 1, 1, 1, 1)), 5) is None


def test_is_squarefree():
    assert is_squarefree(IntPoly(coeffs=(9, -2, 1)))
    assert not is_squarefree(IntPoly(coeffs=(9, -6, 1)))
    assert is_squarefree(IntPoly(coeffs=(0, 1)))
    with pytest.raises(UndefinedError, match="undefined"):
        is_squarefree(IntPoly())


def test_physical_part_degree():
    """Ordinary curves have one unit root, supersingular ones none."""
    assert physical_part_degree(elliptic(1, 5), 5) == 1
    assert physical_part_degree(elliptic(0, 5), 5) == 0
    assert validate_weil(elliptic(1, 5), 5).p_rank_degree == 1
