"""Intersection graphs and their construction."""

import itertools
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

import networkx as nx

from fatgraph.domain.errors import InvalidInputError
from fatgraph.geometry.objects import ObjectSet, intersects

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class IntersectionGraph:
    """Simple undirected graph on vertices 0..n-1.

    When ``object_ids`` is set, vertex v stands for object ``object_ids[v]``.
    """
    n: int
    adjacency: Tuple[FrozenSet[int], ...]
    object_ids: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise InvalidInputError(f"Adjacency has {len(self.adjacency)} rows for {self.n} vertices")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise InvalidInputError(f"Self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n or v not in self.adjacency[u]:
                    raise InvalidInputError(f"Adjacency is not symmetric at ({v}, {u})")
        if self.object_ids is not None and len(self.object_ids) != self.n:
            raise InvalidInputError("object_ids must name one object per vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]],
                   object_ids: Optional[Tuple[int, ...]] = None) -> "IntersectionGraph":
        """Build a graph from an edge list, ignoring duplicates.

        Raises:
            InvalidInputError: On out-of-range endpoints or self-loops.
        """
        if n < 0:
            raise InvalidInputError(f"Vertex count must be non-negative, got {n}")
        adjacency: List[Set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InvalidInputError(f"Self-loop at vertex {u}")
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adjacency), object_ids)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "IntersectionGraph":
        """Relabel a networkx graph to 0..n-1 in sorted node order."""
        nodes = sorted(graph.nodes)
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in graph.edges))

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[Edge]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in sorted(self.adjacency[u]):
                if u < v:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def induced(self, vertices: Iterable[int]) -> nx.Graph:
        """Induced subgraph on the given vertices, keeping original labels."""
        keep = set(vertices)
        graph = nx.Graph()
        graph.add_nodes_from(keep)
        for u in keep:
            graph.add_edges_from((u, v) for v in self.adjacency[u] if v in keep and u < v)
        return graph


def build_intersection_graph_naive(objects: ObjectSet) -> IntersectionGraph:
    """All-pairs construction, used as the reference for the bucketed builder."""
    edges = [
        (a.id, b.id)
        for a, b in itertools.combinations(objects.objects, 2)
        if intersects(a, b)
    ]
    return IntersectionGraph.from_edges(len(objects), edges, tuple(range(len(objects))))


def build_intersection_graph(objects: ObjectSet) -> IntersectionGraph:
    """Build the exact intersection graph using a uniform-grid bucket accelerator.

    The cell side is the largest bounding-box extent, so every object touches at
    most two cells per axis and any intersecting pair shares a cell.

    Args:
        objects: Nonempty object set.

    Returns:
        Intersection graph with vertex v standing for object v.

    Raises:
        InvalidInputError: If the object set is empty.
    """
    if len(objects) == 0:
        raise InvalidInputError("Cannot build an intersection graph of an empty object set")

    bounds = [o.bounds() for o in objects]
    cell = max(h - l for lo, hi in bounds for l, h in zip(lo, hi))

    buckets: Dict[Tuple[int, ...], List[int]] = defaultdict(list)
    for obj, (lo, hi) in zip(objects, bounds):
        ranges = [range(math.floor(l / cell), math.floor(h / cell) + 1) for l, h in zip(lo, hi)]
        for key in itertools.product(*ranges):
            buckets[key].append(obj.id)

    candidates: Set[Edge] = set()
    for members in buckets.values():
        for u, v in itertools.combinations(members, 2):
            candidates.add((u, v) if u < v else (v, u))

    edges = [(u, v) for u, v in sorted(candidates) if intersects(objects[u], objects[v])]
    logger.debug(
        "Built intersection graph: %d vertices, %d candidate pairs, %d edges",
        len(objects), len(candidates), len(edges),
    )
    return IntersectionGraph.from_edges(len(objects), edges, tuple(range(len(objects))))
