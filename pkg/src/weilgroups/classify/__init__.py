"""
Realizable groups of points: the polygon criterion prime by prime, the
elliptic specialisation and the direct-sum candidates for multiple roots.
"""

from weilgroups.classify.classifier import (
    accepted_weil_report,
    classify_all,
    classify_at_prime,
    criterion_local_groups,
    infer_q,
    is_realizable,
    iter_groups,
    realizable_local_groups,
    take_groups,
)
from weilgroups.classify.conjecture import conjecture_local_groups
from weilgroups.classify.elliptic import elliptic_classification, elliptic_groups

__all__ = [
    "accepted_weil_report",
    "classify_all",
    "classify_at_prime",
    "criterion_local_groups",
    "infer_q",
    "is_realizable",
    "iter_groups",
    "realizable_local_groups",
    "take_groups",
    "conjecture_local_groups",
    "elliptic_classification",
    "elliptic_groups",
]
