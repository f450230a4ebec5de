"""
Tests for exact integer polynomials and their text forms.
"""

import pytest
from hypothesis import given, settings, strategies

from weilgroups.errors import PolynomialFormatError, UndefinedError
from weilgroups.polynomials import IntPoly, eval_at_one, substitute_one_minus_t

big_coeffs = strategies.lists(strategies.integers(-(10**30), 10**30), min_size=1, max_size=9)


def test_trailing_zeros_are_stripped():
    """Leading coefficient is nonzero unless the polynomial is zero."""
    f = IntPoly(coeffs=(1, 2, 0, 0))
    assert f.coeffs == (1, 2)
    assert f.degree == 1
    assert IntPoly(coeffs=(0, 0)).is_zero
    assert IntPoly().degree == 0


def test_non_integer_coefficient_rejected():
    with pytest.raises(ValueError, match="not an integer"):
        IntPoly(coeffs=(1, 0.5))


def test_parse_comma_form():
    f = IntPoly.parse("9,-2,1")
    assert f.coeffs == (9, -2, 1)
    assert f.is_monic
    assert f.to_text() == "9,-2,1"


def test_parse_human_forms():
    """Both t and x, optional *, ^ or ** for powers."""
    expected = (9, -2, 1)
    assert IntPoly.parse("t^2-2*t+9").coeffs == expected
    assert IntPoly.parse("x**2 - 2x + 9").coeffs == expected
    assert IntPoly.parse("(t-1)^2 + 8").coeffs == expected


def test_human_form_round_trip():
    f = IntPoly(coeffs=(81, 36, 6, 4, 1))
    assert f.to_human() == "t^4 + 4*t^3 + 6*t^2 + 36*t + 81"
    assert IntPoly.parse(f.to_human()) == f
    assert IntPoly(coeffs=(0, -1)).to_human() == "-t"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "t^2 + y",
        "import os",
        "1,,2",
        "t/2",
        "(",
        "t^2-2*t+9)",
        "t^100000000",
        "9^9^9^9",
        "t**2**3",
        "t^(t)",
        "((t+1)^2)^3",
    ],
)
def test_parse_rejects_garbage(text):
    """Unbalanced, oversized or nested input is a format error, never a crash."""
    with pytest.raises(PolynomialFormatError):
        IntPoly.parse(text)


def test_parse_degree_limit():
    """Exponents are bounded by the classifier degree limit unless overridden."""
    assert IntPoly.parse("t^40 + 1").degree == 40
    with pytest.raises(PolynomialFormatError, match="exceeds the degree limit"):
        IntPoly.parse("t^41 + 1")
    assert IntPoly.parse("t^41 + 1", max_degree=50).degree == 41
    assert IntPoly.parse("(t + 1)^3 (t - 1)").coeffs == (-1, -2, 0, 2, 1)


def test_arithmetic():
    a = IntPoly(coeffs=(9, -2, 1))
    b = IntPoly(coeffs=(3, 1))
    product = a * b
    assert product.coeffs == (27, 3, 1, 1)
    assert (product - a * b).is_zero
    assert product.divmod_exact(b) == a
    assert b.divides(product)
    assert not IntPoly(coeffs=(1, 1)).divides(product)
    assert (b ** 2).coeffs == (9, 6, 1)
    assert a.derivative().coeffs == (-2, 2)
    assert a.evaluate(3) == 12


def test_divide_by_zero_polynomial():
    with pytest.raises(UndefinedError):
        IntPoly(coeffs=(1, 1)).divmod_exact(IntPoly())


def test_substitution_examples():
    """t^2 - bt + q -> t^2 + (b-2)t + (1-b+q)."""
    assert substitute_one_minus_t(IntPoly(coeffs=(5, -3, 1))).coeffs == (3, 1, 1)
    assert substitute_one_minus_t(IntPoly(coeffs=(0, 1))).coeffs == (1, -1)
    assert substitute_one_minus_t(IntPoly(coeffs=(9, -6, 1))).coeffs == (4, 4, 1)


def test_eval_at_one_examples():
    assert eval_at_one(IntPoly(coeffs=(81, 36, 6, 4, 1))) == 128
    assert eval_at_one(IntPoly(coeffs=(9, -6, 1))) == 4
    assert eval_at_one(IntPoly(coeffs=(0, 1))) == 1


@given(big_coeffs)
@settings(max_examples=200, deadline=None)
def test_substitution_is_an_involution(coeffs):
    """t -> 1 - t applied twice is the identity."""
    f = IntPoly(coeffs=tuple(coeffs))
    assert substitute_one_minus_t(substitute_one_minus_t(f)) == f


@given(big_coeffs)
@settings(max_examples=200, deadline=None)
def test_eval_at_one_is_shifted_constant_term(coeffs):
    """f(1) is the constant term of f(1 - t)."""
    f = IntPoly(coeffs=tuple(coeffs))
    assert eval_at_one(f) == substitute_one_minus_t(f).constant_term


@given(strategies.lists(strategies.integers(-(10**12), 10**12), min_size=1, max_size=5))
@settings(max_examples=100, deadline=None)
def test_monic_even_degree_stays_monic(lower):
    """(-1)^deg is 1 for even degree."""
    f = IntPoly(coeffs=tuple(lower) + (0,) * (len(lower) % 2) + (1,))
    assert f.degree % 2 == 0
    shifted = substitute_one_minus_t(f)
    assert shifted.degree == f.degree
    assert shifted.is_monic
