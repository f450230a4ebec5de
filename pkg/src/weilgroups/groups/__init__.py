"""
Finite abelian group types and their enumeration.
"""

from weilgroups.groups.abgroup import (
    TRIVIAL_LABEL,
    direct_sum,
    direct_sum_local,
    group_from_invariant_factors,
    group_label,
    local_groups_of_order,
    local_label,
    parse_group_label,
    partitions_bounded,
    subtract_summand,
)
from weilgroups.models import GroupType, LocalGroupType

__all__ = [
    "GroupType",
    "LocalGroupType",
    "TRIVIAL_LABEL",
    "direct_sum",
    "direct_sum_local",
    "group_from_invariant_factors",
    "group_label",
    "local_groups_of_order",
    "local_label",
    "parse_group_label",
    "partitions_bounded",
    "subtract_summand",
]
