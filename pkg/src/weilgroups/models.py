"""
Data models for weilgroups.

Every record is an immutable pydantic model. Exact rationals are stored as
``fractions.Fraction`` and serialized as ``"num/den"`` strings; integers that
can outgrow a double (orders, counts) are serialized as decimal strings.
"""

import os
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from weilgroups.errors import (
    ConfigurationError,
    InvalidArgumentError,
    NotLocalError,
    TooManyGeneratorsError,
)


def fraction_to_text(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _as_fraction(value: Union[int, str, Fraction]) -> Fraction:
    if isinstance(value, bool):
        raise InvalidArgumentError(f"not a rational number: {value!r}")
    return Fraction(value)


class Verdict(str, Enum):
    """Outcome of a screening step."""
    ACCEPTED = "accepted"
    REJECTED = "rejected"


class LocalStatus(str, Enum):
    """Per-prime outcome of the polygon test."""
    PASS = "pass"
    POLYGON_FAILURE = "polygon_failure"
    TOO_MANY_GENERATORS = "too_many_generators"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


class Subcommand(str, Enum):
    VALIDATE = "validate"
    CLASSIFY = "classify"
    CHECK = "check"
    WITNESS = "witness"
    ELLIPTIC = "elliptic"
    CONJECTURE = "conjecture"
    ORACLE = "oracle"
    FIXTURES = "fixtures"


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------

class ClassifierSettings(BaseModel):
    """Limits for Weil screening and full-group enumeration."""
    model_config = ConfigDict(frozen=True)

    emission_limit: int = Field(
        default=1000, ge=1, description="Maximum number of full groups streamed to output"
    )
    max_degree: int = Field(default=40, ge=1, description="Largest accepted Weil polynomial degree")
    max_q: int = Field(default=10**9, ge=2, description="Upper bound for trial factorisation of q")


ORACLE_BUDGET_ENV = "WEILGROUPS_ORACLE_BUDGET"
ORACLE_WORKERS_ENV = "WEILGROUPS_ORACLE_WORKERS"


class OracleSettings(BaseModel):
    """Limits for brute-force sublattice enumeration."""
    model_config = ConfigDict(frozen=True)

    budget: int = Field(
        default=2**24, ge=1, description="Maximum ℓ^(d·k) before enumeration is refused"
    )
    workers: int = Field(default=1, ge=1, le=64, description="Worker processes for enumeration")
    stabilization_margin: int = Field(
        default=2, ge=0, description="Default bound k = ord_ℓ(f(0)) + margin"
    )

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None, **overrides: Any) -> "OracleSettings":
        """Build settings from ``WEILGROUPS_ORACLE_*`` variables, then apply overrides."""
        environ = os.environ if environ is None else environ
        values: Dict[str, Any] = {}
        for key, name in (("budget", ORACLE_BUDGET_ENV), ("workers", ORACLE_WORKERS_ENV)):
            raw = environ.get(name)
            if raw is None or raw == "":
                continue
            try:
                values[key] = int(raw)
            except ValueError:
                raise ConfigurationError(f"{name} must be an integer, got {raw!r}")
        values.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return cls(**values)
        except ValueError as e:
            raise ConfigurationError(f"invalid oracle settings: {e}")


# ---------------------------------------------------------------------------
# Weil screening
# ---------------------------------------------------------------------------

class WeilReport(BaseModel):
    """Validation record for a candidate Weil polynomial."""
    model_config = ConfigDict(frozen=True)

    polynomial: str  # comma-separated ascending coefficients
    q: int
    p: Optional[int] = None
    e: Optional[int] = None
    g: Optional[int] = None
    monic: bool
    functional_equation: bool
    roots_on_circle: Optional[bool] = None  # None when undecided
    squarefree: bool
    order_n: int
    p_rank_degree: Optional[int] = None
    honda_tate_checked: bool = False
    verdict: Verdict
    reason: Optional[str] = None
    notes: Tuple[str, ...] = ()

    @property
    def accepted(self) -> bool:
        return self.verdict == Verdict.ACCEPTED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "polynomial": self.polynomial,
            "q": self.q,
            "p": self.p,
            "e": self.e,
            "g": self.g,
            "monic": self.monic,
            "functional_equation": self.functional_equation,
            "roots_on_circle": self.roots_on_circle,
            "squarefree": self.squarefree,
            "order_n": str(self.order_n),
            "p_rank_degree": self.p_rank_degree,
            "honda_tate_checked": self.honda_tate_checked,
            "verdict": self.verdict.value,
            "reason": self.reason,
            "notes": list(self.notes),
        }


# ---------------------------------------------------------------------------
# Polygons
# ---------------------------------------------------------------------------

class ConvexPolygon(BaseModel):
    """
    Lower convex lattice path with integer abscissae and exact rational
    ordinates, used for both Newton and Hodge polygons.

    Consecutive stored vertices have strictly increasing slopes; collinear
    points are merged on construction.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    vertices: Tuple[Tuple[int, Fraction], ...]

    @field_validator("vertices", mode="before")
    @classmethod
    def _normalize(cls, value: Sequence[Sequence[Any]]) -> Tuple[Tuple[int, Fraction], ...]:
        points = [(int(x), _as_fraction(y)) for x, y in value]
        if not points:
            raise InvalidArgumentError("a polygon needs at least one vertex")
        if points[0][0] != 0:
            raise InvalidArgumentError("polygons start at abscissa 0")
        merged: List[Tuple[int, Fraction]] = []
        for point in points:
            if merged and point[0] <= merged[-1][0]:
                raise InvalidArgumentError("vertex abscissae must increase strictly")
            while len(merged) >= 2 and _slope(merged[-2], merged[-1]) >= _slope(merged[-1], point):
                if _slope(merged[-2], merged[-1]) > _slope(merged[-1], point):
                    raise InvalidArgumentError("vertices do not form a lower convex path")
                merged.pop()
            merged.append(point)
        return tuple(merged)

    @property
    def width(self) -> int:
        return self.vertices[-1][0]

    @property
    def left(self) -> Tuple[int, Fraction]:
        return self.vertices[0]

    @property
    def right(self) -> Tuple[int, Fraction]:
        return self.vertices[-1]

    def value_at(self, x: Union[int, Fraction]) -> Fraction:
        """Piecewise-linear interpolation at ``0 <= x <= width``."""
        if x < 0 or x > self.width:
            raise InvalidArgumentError(f"abscissa {x} outside [0, {self.width}]")
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            if x0 <= x <= x1:
                return y0 + (y1 - y0) * Fraction(x - x0, 1) / (x1 - x0)
        return self.vertices[0][1]

    def slopes(self) -> List[Fraction]:
        """Slopes of the stored segments, left to right."""
        return [_slope(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    def slope_multiset(self) -> List[Fraction]:
        """Slopes repeated by horizontal length, ascending."""
        result: List[Fraction] = []
        for a, b in zip(self.vertices, self.vertices[1:]):
            result.extend([_slope(a, b)] * (b[0] - a[0]))
        return result

    def to_dict(self) -> Dict[str, Any]:
        return {"vertices": [[x, fraction_to_text(y)] for x, y in self.vertices]}


def _slope(a: Tuple[int, Fraction], b: Tuple[int, Fraction]) -> Fraction:
    return (b[1] - a[1]) / (b[0] - a[0])


# ---------------------------------------------------------------------------
# Finite abelian groups
# ---------------------------------------------------------------------------

class LocalGroupType(BaseModel):
    """
    A finite abelian ℓ-group ⊕ Z/ℓ^(m_i), stored as the ascending multiset of
    positive exponents m_1 <= ... <= m_r (zeros trimmed).
    """
    model_config = ConfigDict(frozen=True)

    prime: int
    parts: Tuple[int, ...] = ()

    @field_validator("parts", mode="before")
    @classmethod
    def _canonical(cls, value: Sequence[int]) -> Tuple[int, ...]:
        parts = [int(m) for m in value]
        if any(m < 0 for m in parts):
            raise InvalidArgumentError(f"negative exponent in {parts}")
        return tuple(sorted(m for m in parts if m > 0))

    @property
    def exponent_sum(self) -> int:
        return sum(self.parts)

    @property
    def order(self) -> int:
        return self.prime ** self.exponent_sum

    @property
    def rank(self) -> int:
        return len(self.parts)

    @property
    def is_trivial(self) -> bool:
        return not self.parts

    def padded(self, r: int) -> Tuple[int, ...]:
        """Exponents padded with leading zeros to exactly r entries."""
        if self.rank > r:
            raise TooManyGeneratorsError(
                f"group not generated by {r} elements", prime=self.prime, parts=self.parts
            )
        return (0,) * (r - self.rank) + self.parts


class GroupType(BaseModel):
    """
    A finite abelian group as its ℓ-primary components, sorted by prime.
    Only primes with a nontrivial component appear.
    """
    model_config = ConfigDict(frozen=True)

    components: Tuple[LocalGroupType, ...] = ()

    @field_validator("components", mode="after")
    @classmethod
    def _canonical(cls, value: Tuple[LocalGroupType, ...]) -> Tuple[LocalGroupType, ...]:
        primes = [c.prime for c in value]
        if len(set(primes)) != len(primes):
            raise InvalidArgumentError(f"repeated prime in group components {primes}")
        return tuple(sorted((c for c in value if not c.is_trivial), key=lambda c: c.prime))

    @classmethod
    def trivial(cls) -> "GroupType":
        return cls()

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, Sequence[int]]) -> "GroupType":
        return cls(
            components=tuple(LocalGroupType(prime=int(p), parts=tuple(parts)) for p, parts in mapping.items())
        )

    @classmethod
    def from_local(cls, local: LocalGroupType) -> "GroupType":
        return cls(components=(local,))

    @property
    def order(self) -> int:
        result = 1
        for c in self.components:
            result *= c.order
        return result

    @property
    def primes(self) -> List[int]:
        return [c.prime for c in self.components]

    def local(self, ell: int) -> LocalGroupType:
        for c in self.components:
            if c.prime == ell:
                return c
        return LocalGroupType(prime=ell)

    def as_mapping(self) -> Dict[int, Tuple[int, ...]]:
        return {c.prime: c.parts for c in self.components}

    def invariant_factors(self) -> List[int]:
        """Orders n_1 | n_2 | ... of the invariant-factor decomposition."""
        width = max((c.rank for c in self.components), default=0)
        factors = [1] * width
        for c in self.components:
            for i, m in enumerate(c.padded(width)):
                factors[i] *= c.prime ** m
        return [n for n in factors if n > 1]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": str(self.order),
            "components": {str(c.prime): list(c.parts) for c in self.components},
        }


# ---------------------------------------------------------------------------
# Classification records
# ---------------------------------------------------------------------------

class LocalCandidate(BaseModel):
    """A candidate ℓ-group with its Hodge polygon and polygon-test verdict."""
    model_config = ConfigDict(frozen=True)

    group: LocalGroupType
    hodge_polygon: ConvexPolygon
    passes: bool
    first_failing_abscissa: Optional[int] = None


class PrimeClassification(BaseModel):
    """Everything computed at one prime ℓ dividing f(1)."""
    model_config = ConfigDict(frozen=True)

    prime: int
    exponent: int  # ord_ℓ(f(1))
    newton_polygon: ConvexPolygon
    candidates: Tuple[LocalCandidate, ...]

    @property
    def realizable(self) -> List[LocalGroupType]:
        return [c.group for c in self.candidates if c.passes]


class ClassificationResult(BaseModel):
    """Realizable groups in an isogeny class, prime by prime."""
    model_config = ConfigDict(frozen=True)

    weil: WeilReport
    per_prime: Tuple[PrimeClassification, ...]
    total_count: int

    def at(self, ell: int) -> PrimeClassification:
        for entry in self.per_prime:
            if entry.prime == ell:
                return entry
        raise InvalidArgumentError(f"{ell} does not divide f(1) = {self.weil.order_n}")

    def realizable_at(self, ell: int) -> List[LocalGroupType]:
        return self.at(ell).realizable


class PrimeDiagnostic(BaseModel):
    """Outcome of the polygon test for one prime of a given group."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    prime: int
    group: LocalGroupType
    status: LocalStatus
    first_failing_abscissa: Optional[int] = None
    newton_value: Optional[Fraction] = None
    hodge_value: Optional[Fraction] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "prime": self.prime,
            "parts": list(self.group.parts),
            "status": self.status.value,
            "first_failing_abscissa": self.first_failing_abscissa,
            "newton_value": None if self.newton_value is None else fraction_to_text(self.newton_value),
            "hodge_value": None if self.hodge_value is None else fraction_to_text(self.hodge_value),
        }


class RealizabilityReport(BaseModel):
    """Answer to "is G a group of points in this isogeny class?"."""
    model_config = ConfigDict(frozen=True)

    group: GroupType
    order_n: int
    realizable: bool
    wrong_order: bool = False
    diagnostics: Tuple[PrimeDiagnostic, ...] = ()

    @property
    def first_failure(self) -> Optional[PrimeDiagnostic]:
        return next((d for d in self.diagnostics if d.status != LocalStatus.PASS), None)


class EllipticClassification(BaseModel):
    """Groups of points on elliptic curves with trace b over F_q."""
    model_config = ConfigDict(frozen=True)

    q: int
    b: int
    order_n: int
    supersingular_double_root: bool  # b^2 == 4q
    groups: Tuple[GroupType, ...]
    note: Optional[str] = None


class ConjectureResult(BaseModel):
    """Direct sums predicted for a nested factorisation f = f_1 ... f_s."""
    model_config = ConfigDict(frozen=True)

    prime: int
    factors: Tuple[str, ...]
    groups: Tuple[LocalGroupType, ...]
    conjectural: bool
    proved: bool
    deg_bound_holds: bool
    note: str


# ---------------------------------------------------------------------------
# Lattices
# ---------------------------------------------------------------------------

class LocalMatrix(BaseModel):
    """
    Square matrix over the localization of Z at ℓ: exact rationals whose
    denominators are prime to ℓ.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    prime: int
    rows: Tuple[Tuple[Fraction, ...], ...]

    @field_validator("rows", mode="before")
    @classmethod
    def _rows(cls, value: Sequence[Sequence[Any]]) -> Tuple[Tuple[Fraction, ...], ...]:
        rows = tuple(tuple(_as_fraction(x) for x in row) for row in value)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise InvalidArgumentError("local matrices must be square and nonempty")
        return rows

    @model_validator(mode="after")
    def _check_local(self) -> "LocalMatrix":
        for row in self.rows:
            for x in row:
                if x.denominator % self.prime == 0:
                    raise NotLocalError(
                        f"entry {fraction_to_text(x)} has denominator divisible by {self.prime}",
                        prime=self.prime,
                    )
        return self

    @property
    def dim(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> List[Fraction]:
        return [row[j] for row in self.rows]

    def to_lists(self) -> List[List[Fraction]]:
        return [list(row) for row in self.rows]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "prime": self.prime,
            "rows": [[fraction_to_text(x) for x in row] for row in self.rows],
        }


class ElementaryDivisors(BaseModel):
    """ℓ-valuations e_1 <= ... <= e_d of the elementary divisors of a matrix."""
    model_config = ConfigDict(frozen=True)

    prime: int
    exponents: Tuple[int, ...]

    def cokernel(self) -> LocalGroupType:
        return LocalGroupType(prime=self.prime, parts=self.exponents)


class WitnessBasis(BaseModel):
    """The data behind an explicit witness lattice T = <v_0, ..., v_(d-1)>."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    prime: int
    exponents: Tuple[int, ...]  # m_1 <= ... <= m_d, zero-padded
    partial_sums: Tuple[int, ...]  # M(0), ..., M(d)
    corrections: Tuple[Fraction, ...]  # u_1, ..., u_d

    def to_dict(self) -> Dict[str, Any]:
        return {
            "prime": self.prime,
            "exponents": list(self.exponents),
            "partial_sums": list(self.partial_sums),
            "corrections": [fraction_to_text(u) for u in self.corrections],
        }


class SublatticeBasis(BaseModel):
    """
    Full-rank sublattice of Z^d given by an upper-triangular Hermite normal
    form: positive diagonal, 0 <= h_ij < h_ii for j > i. Columns generate.
    """
    model_config = ConfigDict(frozen=True)

    matrix: Tuple[Tuple[int, ...], ...]
    index: int

    @model_validator(mode="after")
    def _check_hnf(self) -> "SublatticeBasis":
        h = self.matrix
        d = len(h)
        if any(len(row) != d for row in h):
            raise InvalidArgumentError("HNF matrix must be square")
        det = 1
        for i in range(d):
            if h[i][i] <= 0:
                raise InvalidArgumentError("HNF diagonal must be positive")
            det *= h[i][i]
            for j in range(d):
                if j < i and h[i][j] != 0:
                    raise InvalidArgumentError("HNF matrix must be upper triangular")
                if j > i and not 0 <= h[i][j] < h[i][i]:
                    raise InvalidArgumentError("HNF off-diagonal entries must be reduced")
        if det != self.index:
            raise InvalidArgumentError(f"index {self.index} does not match determinant {det}")
        return self

    @property
    def dim(self) -> int:
        return len(self.matrix)


class OracleComparison(BaseModel):
    """Brute-force achievable set against the polygon criterion."""
    model_config = ConfigDict(frozen=True)

    prime: int
    bound: int
    lattice_count: int
    achievable: Tuple[LocalGroupType, ...]
    achievable_next: Tuple[LocalGroupType, ...]
    criterion: Tuple[LocalGroupType, ...]
    necessity_violations: int

    @property
    def stable(self) -> bool:
        return set(self.achievable) == set(self.achievable_next)

    @property
    def agrees(self) -> bool:
        return self.stable and set(self.achievable) == set(self.criterion)
