"""
Regression cases with known answers, shared by the test-suite and the
hidden ``fixtures`` CLI subcommand.

Each case is a zero-argument callable returning ``(passed, detail)``.
"""

import logging
import random
from typing import Callable, List, Tuple

from pydantic import BaseModel, ConfigDict

from weilgroups.classify import conjecture_local_groups, elliptic_groups, realizable_local_groups
from weilgroups.errors import MultipleRootsError
from weilgroups.groups import group_label, parse_group_label, subtract_summand
from weilgroups.lattice import cokernel_integer
from weilgroups.models import GroupType
from weilgroups.polygons import hodge_polygon, newton_polygon
from weilgroups.polynomials import IntPoly, eval_at_one, substitute_one_minus_t, validate_weil

logger = logging.getLogger(__name__)

# Weil polynomial (t^2 - 2t + 9)(t + 3)^2 over F_9 and its nested factorisation.
COUNTEREXAMPLE_POLY = IntPoly(coeffs=(81, 36, 6, 4, 1))
COUNTEREXAMPLE_FACTORS = (IntPoly(coeffs=(27, 3, 1, 1)), IntPoly(coeffs=(3, 1)))
COUNTEREXAMPLE_GROUP = "Z/8 + Z/16"

# (t - 3)^2 over F_9: a Weil polynomial with a double root.
DOUBLE_ROOT_POLY = IntPoly(coeffs=(9, -6, 1))


def counterexample_matrix() -> List[List[int]]:
    """
    Action of 1 - F on an invariant lattice with basis u_1..u_4 for the
    surface with Weil polynomial (t^2 - 2t + 9)(t + 3)^2; column j is the
    image of u_(j+1):

        u_1 -> 4u_1 + 2u_3 - u_4
        u_2 -> 16u_3
        u_3 -> 4u_1 - u_2 + 4u_3
        u_4 -> 8u_1
    """
    columns = [(4, 0, 2, -1), (0, 0, 16, 0), (4, -1, 4, 0), (8, 0, 0, 0)]
    return [[column[i] for column in columns] for i in range(4)]


class FixtureOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    detail: str


Case = Callable[[], Tuple[bool, str]]


def _vertices(polygon) -> List[Tuple[int, int]]:
    return [(x, int(y)) for x, y in polygon.vertices]


def hodge_straight_line() -> Tuple[bool, str]:
    vertices = _vertices(hodge_polygon((1, 1), 2))
    return vertices == [(0, 2), (2, 0)], f"Hp((1,1), 2) vertices {vertices}"


def hodge_zero_slope() -> Tuple[bool, str]:
    vertices = _vertices(hodge_polygon((0, 2), 2))
    return vertices == [(0, 2), (1, 0), (2, 0)], f"Hp((0,2), 2) vertices {vertices}"


def elliptic_newton_level() -> Tuple[bool, str]:
    """t^2 + (b-2)t + N for q=9, b=2 sits at level ord_2(N) = 3 with no middle point."""
    shifted = substitute_one_minus_t(IntPoly(coeffs=(9, -2, 1)))
    vertices = _vertices(newton_polygon(shifted, 2))
    return vertices == [(0, 3), (2, 0)], f"Np_2({shifted}) vertices {vertices}"


def double_root_validation() -> Tuple[bool, str]:
    report = validate_weil(DOUBLE_ROOT_POLY, 9)
    passed = report.accepted and not report.squarefree and report.order_n == 4
    return passed, f"verdict={report.verdict.value} squarefree={report.squarefree} N={report.order_n}"


def double_root_rejected_by_classifier() -> Tuple[bool, str]:
    try:
        realizable_local_groups(DOUBLE_ROOT_POLY, 2, q=9)
    except MultipleRootsError as e:
        return True, str(e)
    return False, "classification accepted a polynomial with a double root"


def double_root_elliptic() -> Tuple[bool, str]:
    labels = [group_label(g) for g in elliptic_groups(9, 6)]
    return labels == ["Z/2 + Z/2"], f"elliptic_groups(9, 6) = {labels}"


def counterexample_cokernel() -> Tuple[bool, str]:
    group = cokernel_integer(counterexample_matrix())
    expected = parse_group_label(COUNTEREXAMPLE_GROUP)
    n = eval_at_one(COUNTEREXAMPLE_POLY)
    passed = group == expected and group.order == n == 128
    return passed, f"cokernel {group_label(group)} of order {group.order}, f(1) = {n}"


def counterexample_not_a_direct_sum() -> Tuple[bool, str]:
    result = conjecture_local_groups(COUNTEREXAMPLE_FACTORS, 2, q=9)
    target = parse_group_label(COUNTEREXAMPLE_GROUP)
    absent = target.local(2) not in result.groups
    no_summand = subtract_summand(target, parse_group_label("Z/4")) is None
    labels = ", ".join(group_label(GroupType.from_local(g)) for g in result.groups)
    return absent and no_summand and result.conjectural, f"candidates: {labels}"


def shifted_elliptic_symbolic(samples: int = 100, seed: int = 0) -> Tuple[bool, str]:
    rng = random.Random(seed)
    for _ in range(samples):
        b = rng.randint(-10**6, 10**6)
        q = rng.randint(2, 10**6)
        shifted = substitute_one_minus_t(IntPoly(coeffs=(q, -b, 1)))
        if shifted.coeffs != (1 - b + q, b - 2, 1):
            return False, f"b={b} q={q}: got {shifted.to_text()}"
    return True, f"{samples} random (b, q) pairs"


CASES: List[Tuple[str, Case]] = [
    ("hodge polygon straight line", hodge_straight_line),
    ("hodge polygon zero slope", hodge_zero_slope),
    ("elliptic newton level", elliptic_newton_level),
    ("(t-3)^2 validation", double_root_validation),
    ("(t-3)^2 classifier refusal", double_root_rejected_by_classifier),
    ("(t-3)^2 elliptic group", double_root_elliptic),
    ("counterexample cokernel", counterexample_cokernel),
    ("counterexample not a direct sum", counterexample_not_a_direct_sum),
    ("f(1-t) for t^2 - bt + q", shifted_elliptic_symbolic),
]


def run_fixtures() -> List[FixtureOutcome]:
    outcomes = []
    for name, case in CASES:
        try:
            passed, detail = case()
        except Exception as e:  # a crashing case is a failing case
            logger.exception("fixture %s raised", name)
            passed, detail = False, f"{type(e).__name__}: {e}"
        outcomes.append(FixtureOutcome(name=name, passed=passed, detail=detail))
    return outcomes
