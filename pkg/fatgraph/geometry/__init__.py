"""Fat objects, exact intersection predicates and intersection graphs."""

from fatgraph.geometry.objects import (
    Ball,
    Box,
    Diameter,
    FatObject,
    ObjectSet,
    bounding_box,
    diameter,
    fatness,
    inner_ball,
    intersects,
)
from fatgraph.geometry.graph import (
    IntersectionGraph,
    build_intersection_graph,
    build_intersection_graph_naive,
)

__all__ = [
    "Ball",
    "Box",
    "Diameter",
    "FatObject",
    "ObjectSet",
    "bounding_box",
    "diameter",
    "fatness",
    "inner_ball",
    "intersects",
    "IntersectionGraph",
    "build_intersection_graph",
    "build_intersection_graph_naive",
]
