"""
Exact integer polynomials.

``IntPoly`` is an immutable value type holding ascending coefficients
(``coeffs[i]`` is the coefficient of ``t**i``) as Python integers, so
nothing ever overflows or rounds. Heavier algebra (gcd, division,
composition) is delegated to sympy's ``Poly`` over ``ZZ``/``QQ``.

Two text forms are supported and both round-trip through ``IntPoly.parse``:

    >>> IntPoly.parse("9,-2,1").to_human()
    't^2 - 2*t + 9'
    >>> IntPoly.parse("t^2-2*t+9").to_text()
    '9,-2,1'
"""

import re
from tokenize import TokenError
from typing import Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator
from sympy import Poly, Symbol, sympify
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)
from sympy.polys.domains import QQ, ZZ
from sympy.polys.polyerrors import PolynomialError

from weilgroups.errors import PolynomialFormatError, UndefinedError
from weilgroups.models import ClassifierSettings

T = Symbol("t")

_COMMA_FORM = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")
_HUMAN_ALPHABET = re.compile(r"^[0-9tx+\-*^()\s]+$")
_TRANSFORMATIONS = standard_transformations + (implicit_multiplication_application, convert_xor)
_EXPONENT = re.compile(r"\^\s*(\d*)\s*")


def _check_exponents(source: str, limit: int) -> None:
    """Reject non-literal, oversized and nested powers in a human-form polynomial."""
    for match in _EXPONENT.finditer(source):
        digits = match.group(1)
        if not digits:
            raise PolynomialFormatError(f"exponent must be an integer literal in {source!r}")
        if int(digits) > limit:
            raise PolynomialFormatError(f"exponent {digits} exceeds the degree limit {limit}")
        if source.startswith("^", match.end()):
            raise PolynomialFormatError(f"chained powers are not supported in {source!r}")

    # a parenthesised group containing a power may not itself be raised to a power
    stack: List[bool] = []
    for i, ch in enumerate(source):
        if ch == "(":
            stack.append(False)
        elif ch == "^" and stack:
            stack[-1] = True
        elif ch == ")":
            if not stack:
                raise PolynomialFormatError(f"unbalanced parentheses in {source!r}")
            nested = stack.pop()
            if stack:
                stack[-1] = stack[-1] or nested
            if nested and source[i + 1:].lstrip().startswith("^"):
                raise PolynomialFormatError(f"nested powers are not supported in {source!r}")
    if stack:
        raise PolynomialFormatError(f"unbalanced parentheses in {source!r}")


class IntPoly(BaseModel):
    """Univariate polynomial with exact integer coefficients, ascending by degree."""
    model_config = ConfigDict(frozen=True)

    coeffs: Tuple[int, ...] = ()

    @field_validator("coeffs", mode="before")
    @classmethod
    def _normalize(cls, value: Iterable[int]) -> Tuple[int, ...]:
        coeffs = []
        for c in value:
            if isinstance(c, bool) or int(c) != c:
                raise PolynomialFormatError(f"coefficient {c!r} is not an integer")
            coeffs.append(int(c))
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)

    # -- construction -------------------------------------------------

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPoly":
        return cls(coeffs=(0,) * degree + (coefficient,))

    @classmethod
    def from_sympy(cls, poly: Poly) -> "IntPoly":
        coeffs = list(reversed(poly.all_coeffs()))
        for c in coeffs:
            if not sympify(c).is_integer:
                raise PolynomialFormatError(f"coefficient {c} is not an integer")
        return cls(coeffs=tuple(int(c) for c in coeffs))

    @classmethod
    def parse(cls, text: str, max_degree: Optional[int] = None) -> "IntPoly":
        """
        Parse either the comma-separated ascending form or the human form.

        In the human form every exponent must be a literal no larger than
        ``max_degree`` (default ``ClassifierSettings().max_degree``), and a
        power may not be raised to a further power, so the expression stays
        small before sympy expands it.
        """
        if _COMMA_FORM.match(text):
            return cls(coeffs=tuple(int(part) for part in text.split(",")))
        if not text.strip() or not _HUMAN_ALPHABET.match(text):
            raise PolynomialFormatError(f"cannot parse polynomial {text!r}")
        source = text.replace("x", "t").replace("**", "^")
        _check_exponents(source, max_degree or ClassifierSettings().max_degree)
        try:
            expr = parse_expr(source, local_dict={"t": T}, transformations=_TRANSFORMATIONS)
            poly = Poly(expr, T, domain=QQ)
        except (SyntaxError, TypeError, TokenError, PolynomialError, ValueError, AttributeError) as e:
            raise PolynomialFormatError(f"cannot parse polynomial {text!r}: {e}")
        return cls.from_sympy(poly)

    # -- basic properties ---------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return max(len(self.coeffs) - 1, 0)

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def evaluate(self, x: int) -> int:
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def derivative(self) -> "IntPoly":
        return IntPoly(coeffs=tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(coeffs=tuple(self.coefficient(i) + other.coefficient(i) for i in range(n)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(coeffs=tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero or other.is_zero:
            return IntPoly()
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return IntPoly(coeffs=tuple(product))

    def __pow__(self, exponent: int) -> "IntPoly":
        result = IntPoly(coeffs=(1,))
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor: int) -> "IntPoly":
        return IntPoly(coeffs=tuple(factor * c for c in self.coeffs))

    def divmod_exact(self, divisor: "IntPoly") -> "IntPoly":
        """
        Exact quotient ``self / divisor`` in ZZ[t].

        Raises:
            UndefinedError: if the divisor is zero.
            PolynomialFormatError: if the division leaves a remainder or a
                non-integral quotient.
        """
        if divisor.is_zero:
            raise UndefinedError("division by the zero polynomial")
        quotient, remainder = self.to_sympy(QQ).div(divisor.to_sympy(QQ))
        if not remainder.is_zero:
            raise PolynomialFormatError(f"{divisor} does not divide {self}")
        return IntPoly.from_sympy(quotient)

    def divides(self, other: "IntPoly") -> bool:
        try:
            other.divmod_exact(self)
        except PolynomialFormatError:
            return False
        return True

    def to_sympy(self, domain=ZZ) -> Poly:
        return Poly(list(reversed(self.coeffs)) or [0], T, domain=domain)

    # -- text forms ---------------------------------------------------

    def to_text(self) -> str:
        """Comma-separated ascending coefficients, e.g. ``"9,-2,1"``."""
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def to_human(self) -> str:
        """Descending human form, e.g. ``"t^2 - 2*t + 9"``."""
        terms: List[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if i == 0:
                body = str(magnitude)
            else:
                power = "t" if i == 1 else f"t^{i}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if not terms:
                terms.append(body if sign == "+" else f"-{body}")
            else:
                terms.append(f"{sign} {body}")
        return " ".join(terms) if terms else "0"

    def __str__(self) -> str:
        return self.to_human()
