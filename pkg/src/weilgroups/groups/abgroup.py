"""
Finite abelian group types: partition enumeration, direct sums, summand
removal and the canonical text label.

Labels list cyclic factors ascending by prime, then by exponent:

    >>> group_label(GroupType.from_mapping({2: [1, 2], 3: [1]}))
    'Z/2 + Z/4 + Z/3'
"""

import re
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import partitions

from weilgroups.arith import prime_factorization
from weilgroups.errors import GroupLabelError
from weilgroups.models import GroupType, LocalGroupType

TRIVIAL_LABEL = "0"

_TERM = re.compile(r"^\(?Z/(\d+)\)?(?:\^(\d+))?$")


def partitions_bounded(m: int, max_parts: int) -> List[Tuple[int, ...]]:
    """
    All partitions of m into at most ``max_parts`` positive parts, each
    ascending, ordered by number of parts and then lexicographically.

    Example:
        partitions_bounded(5, 3) ->
            [(5,), (1, 4), (2, 3), (1, 1, 3), (1, 2, 2)]
    """
    if m == 0:
        return [()]
    if max_parts < 1:
        return []
    result = []
    for p in partitions(m, m=max_parts):
        parts: List[int] = []
        for value, multiplicity in p.items():
            parts.extend([value] * multiplicity)
        result.append(tuple(sorted(parts)))
    return sorted(result, key=lambda parts: (len(parts), parts))


def local_groups_of_order(ell: int, m: int, max_parts: int) -> List[LocalGroupType]:
    return [LocalGroupType(prime=ell, parts=parts) for parts in partitions_bounded(m, max_parts)]


def direct_sum(a: GroupType, b: GroupType) -> GroupType:
    """Componentwise union of cyclic factors."""
    merged: Dict[int, List[int]] = {}
    for group in (a, b):
        for component in group.components:
            merged.setdefault(component.prime, []).extend(component.parts)
    return GroupType.from_mapping(merged)


def direct_sum_local(a: LocalGroupType, b: LocalGroupType) -> LocalGroupType:
    return LocalGroupType(prime=a.prime, parts=a.parts + b.parts)


def subtract_summand(g: GroupType, s: GroupType) -> Optional[GroupType]:
    """
    The complement C with g ≅ s ⊕ C, or ``None`` if s is not a direct summand.

    By uniqueness of the cyclic decomposition, s is a summand exactly when
    its cyclic factors form a sub-multiset of g's at every prime.
    """
    remaining: Dict[int, List[int]] = {}
    for component in g.components:
        remaining[component.prime] = list(component.parts)
    for component in s.components:
        have = Counter(remaining.get(component.prime, []))
        need = Counter(component.parts)
        if any(have[m] < count for m, count in need.items()):
            return None
        remaining[component.prime] = sorted((have - need).elements())
    return GroupType.from_mapping(remaining)


def group_label(g: GroupType) -> str:
    if not g.components:
        return TRIVIAL_LABEL
    return " + ".join(
        f"Z/{component.prime ** m}" for component in g.components for m in component.parts
    )


def local_label(local: LocalGroupType) -> str:
    return group_label(GroupType.from_local(local))


def parse_group_label(text: str) -> GroupType:
    """
    Parse a label such as ``"Z/2 + Z/4 + Z/3"``.

    Composite moduli are split into primary parts (``Z/6`` is ``Z/2 + Z/3``),
    ``Z/1`` is trivial and ``(Z/2)^2`` repeats a factor.
    """
    cleaned = text.replace(" ", "")
    if not cleaned:
        raise GroupLabelError("empty group label")
    if cleaned == TRIVIAL_LABEL:
        return GroupType.trivial()
    merged: Dict[int, List[int]] = {}
    for term in cleaned.split("+"):
        match = _TERM.match(term)
        if not match:
            raise GroupLabelError(f"cannot parse group label term {term!r} in {text!r}")
        modulus = int(match.group(1))
        repeat = int(match.group(2) or 1)
        if modulus < 1:
            raise GroupLabelError(f"invalid modulus in {term!r}")
        for p, e in prime_factorization(modulus).items():
            merged.setdefault(p, []).extend([e] * repeat)
    return GroupType.from_mapping(merged)


def group_from_invariant_factors(orders: Sequence[int]) -> GroupType:
    """
    ⊕ Z/n_i for positive integers n_i, split into primary components.

    Example:
        group_from_invariant_factors([2, 12]) -> Z/2 + Z/4 + Z/3
    """
    merged: Dict[int, List[int]] = {}
    for n in orders:
        if n < 1:
            raise GroupLabelError(f"cyclic order must be positive, got {n}")
        for p, e in prime_factorization(n).items():
            merged.setdefault(p, []).append(e)
    return GroupType.from_mapping(merged)
