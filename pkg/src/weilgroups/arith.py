"""
Exact integer helpers: primality, prime powers, factorisation and
ℓ-adic valuations of integers and rationals.
"""

from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

from sympy import factorint, integer_nthroot, isprime, multiplicity

from weilgroups.errors import NotPrimeError, UndefinedError

Rational = Union[int, Fraction]


def require_prime(ell: int) -> int:
    """Return ``ell`` unchanged, raising ``NotPrimeError`` if it is not prime."""
    if not isinstance(ell, int) or not isprime(ell):
        raise NotPrimeError(f"{ell} is not a prime number", prime=ell)
    return ell


def ord_ell(value: Rational, ell: int) -> int:
    """
    ℓ-adic valuation of a nonzero integer or rational.

    Raises:
        UndefinedError: for zero (valuation +∞ is never represented).
    """
    if value == 0:
        raise UndefinedError("valuation of zero is undefined", prime=ell)
    if isinstance(value, Fraction):
        return int(multiplicity(ell, abs(value.numerator))) - int(
            multiplicity(ell, value.denominator)
        )
    return int(multiplicity(ell, abs(value)))


def is_ell_unit(value: Rational, ell: int) -> bool:
    return value != 0 and ord_ell(value, ell) == 0


def prime_power(q: int, bound: Optional[int] = None) -> Optional[Tuple[int, int]]:
    """
    Return ``(p, e)`` with ``q = p**e`` (e ≥ 1), or ``None`` if q is not a
    prime power. ``bound`` caps the trial factorisation effort.
    """
    if q < 2 or (bound is not None and q > bound):
        return None
    factors = factorint(q)
    if len(factors) != 1:
        return None
    ((p, e),) = factors.items()
    return int(p), int(e)


def prime_factorization(n: int) -> Dict[int, int]:
    """Factor ``|n|`` into ``{prime: exponent}``, ascending by prime."""
    if n == 0:
        raise UndefinedError("cannot factor zero")
    return {int(p): int(e) for p, e in sorted(factorint(abs(n)).items())}


def exact_root(n: int, k: int) -> Optional[int]:
    """The positive integer k-th root of n when it exists."""
    if n <= 0 or k <= 0:
        return None
    root, exact = integer_nthroot(n, k)
    return int(root) if exact else None
