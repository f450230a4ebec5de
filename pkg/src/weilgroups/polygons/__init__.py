"""
Newton and Hodge polygons and their comparison.
"""

from weilgroups.models import ConvexPolygon
from weilgroups.polygons.polygon import (
    endpoints_match,
    first_violation,
    hodge_polygon,
    hodge_polygon_of_group,
    lies_on_or_above,
    newton_polygon,
)

__all__ = [
    "ConvexPolygon",
    "endpoints_match",
    "first_violation",
    "hodge_polygon",
    "hodge_polygon_of_group",
    "lies_on_or_above",
    "newton_polygon",
]
