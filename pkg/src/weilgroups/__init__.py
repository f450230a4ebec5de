"""
weilgroups: groups of rational points in an isogeny class of abelian
varieties over a finite field.

A finite abelian group G of order f(1) is the group of points of some
variety with squarefree Weil polynomial f exactly when, at every prime ℓ,
the Newton polygon of f(1 - t) lies on or above the Hodge polygon of the
ℓ-part of G. This package decides that criterion exactly, builds explicit
lattice witnesses for every realizable group, and checks the criterion
against brute-force enumeration of invariant lattices.

Example:
    Basic usage::

        from weilgroups import IntPoly, classify_all, iter_groups, group_label

        f = IntPoly.parse("t^2 - 2*t + 9")
        result = classify_all(f, q=9)
        print(result.total_count)                          # 2
        print([group_label(g) for g in iter_groups(result)])  # ['Z/8', 'Z/2 + Z/4']

Note:
    All arithmetic is exact; there is no floating point anywhere.
"""

__version__ = "0.1.0"
__license__ = "MIT"

from weilgroups.errors import ErrorCode, WeilGroupsError
from weilgroups.models import (
    ClassificationResult,
    ClassifierSettings,
    ConjectureResult,
    ConvexPolygon,
    ElementaryDivisors,
    EllipticClassification,
    GroupType,
    LocalGroupType,
    LocalMatrix,
    OracleComparison,
    OracleSettings,
    RealizabilityReport,
    SublatticeBasis,
    WeilReport,
)
from weilgroups.polynomials import (
    IntPoly,
    eval_at_one,
    is_squarefree,
    real_companion,
    substitute_one_minus_t,
    validate_weil,
)
from weilgroups.polygons import endpoints_match, hodge_polygon, lies_on_or_above, newton_polygon
from weilgroups.groups import (
    direct_sum,
    group_label,
    parse_group_label,
    partitions_bounded,
    subtract_summand,
)
from weilgroups.classify import (
    classify_all,
    conjecture_local_groups,
    elliptic_groups,
    is_realizable,
    iter_groups,
    realizable_local_groups,
)
from weilgroups.lattice import (
    characteristic_polynomial,
    cokernel_integer,
    smith_local,
    verify_witness,
    witness_matrix,
)
from weilgroups.oracle import (
    achievable_groups_bruteforce,
    companion_matrix,
    compare_with_criterion,
    enumerate_invariant_sublattices,
)

__all__ = [
    "__version__",
    "get_version",
    # Errors
    "ErrorCode",
    "WeilGroupsError",
    # Models
    "ClassificationResult",
    "ClassifierSettings",
    "ConjectureResult",
    "ConvexPolygon",
    "ElementaryDivisors",
    "EllipticClassification",
    "GroupType",
    "LocalGroupType",
    "LocalMatrix",
    "OracleComparison",
    "OracleSettings",
    "RealizabilityReport",
    "SublatticeBasis",
    "WeilReport",
    # Polynomials
    "IntPoly",
    "eval_at_one",
    "is_squarefree",
    "real_companion",
    "substitute_one_minus_t",
    "validate_weil",
    # Polygons
    "endpoints_match",
    "hodge_polygon",
    "lies_on_or_above",
    "newton_polygon",
    # Groups
    "direct_sum",
    "group_label",
    "parse_group_label",
    "partitions_bounded",
    "subtract_summand",
    # Classification
    "classify_all",
    "conjecture_local_groups",
    "elliptic_groups",
    "is_realizable",
    "iter_groups",
    "realizable_local_groups",
    # Lattices
    "characteristic_polynomial",
    "cokernel_integer",
    "smith_local",
    "verify_witness",
    "witness_matrix",
    # Oracle
    "achievable_groups_bruteforce",
    "companion_matrix",
    "compare_with_criterion",
    "enumerate_invariant_sublattices",
]


def get_version() -> str:
    return __version__
