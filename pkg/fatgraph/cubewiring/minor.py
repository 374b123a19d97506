"""Embedding a graph as a minor of a grid hypercube."""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, List, Tuple

import networkx as nx

from fatgraph.cubewiring.matching import WiringInstance, wire_matching
from fatgraph.cubewiring.paths import Point, Wiring, snake_order
from fatgraph.domain.errors import InvalidInputError, UnsupportedDimensionError

logger = logging.getLogger(__name__)

Edge = Tuple[Hashable, Hashable]


@dataclass
class MinorEmbedding:
    """Branch sets of grid points per vertex and one adjacent witness pair per edge."""
    dimension: int
    side: int
    branch_sets: Dict[Hashable, FrozenSet[Point]]
    edge_witnesses: Dict[Edge, Tuple[Point, Point]]
    wiring: Wiring
    stats: Dict[str, object] = field(default_factory=dict)

    def contract(self) -> nx.Graph:
        """Graph on the branch sets, adjacent wherever two of them hold neighboring grid points."""
        owner = {point: v for v, points in self.branch_sets.items() for point in points}
        graph = nx.Graph()
        graph.add_nodes_from(self.branch_sets)
        for point, v in owner.items():
            for nb in _grid_neighbors(point):
                u = owner.get(nb, v)
                if u != v:
                    graph.add_edge(v, u)
        return graph

    def to_dict(self) -> Dict[str, object]:
        return {
            "d": self.dimension,
            "side": self.side,
            "branch_sets": {str(v): sorted(list(p) for p in points) for v, points in self.branch_sets.items()},
            "edge_witnesses": [
                {"edge": [str(u), str(v)], "points": [list(a), list(b)]}
                for (u, v), (a, b) in self.edge_witnesses.items()
            ],
            "stats": self.stats,
        }


def _grid_neighbors(point: Point):
    for axis in range(len(point)):
        for step in (-1, 1):
            yield point[:axis] + (point[axis] + step,) + point[axis + 1:]


def embed_minor(graph: nx.Graph, dimension: int = 3, length_factor: int = 200) -> MinorEmbedding:
    """Embed ``graph`` as a minor of a d-dimensional grid.

    Each vertex v becomes a path of deg(v) consecutive points on the bottom
    face; each edge (u, v) gets two adjacent slots on the top face, one per
    endpoint. The matching from path points to slots is wired, and the branch
    set of v is its path together with its wires.

    Raises:
        UnsupportedDimensionError: For dimension below 3.
        InvalidInputError: For graphs without edges, with isolated vertices or self-loops.
    """
    if dimension < 3:
        raise UnsupportedDimensionError(dimension, 3, "Minor embedding")
    if graph.number_of_edges() == 0:
        raise InvalidInputError("Graph has no edges")
    if nx.number_of_selfloops(graph):
        raise InvalidInputError("Graph has self-loops")
    isolated = list(nx.isolates(graph))
    if isolated:
        raise InvalidInputError(f"Graph has isolated vertices {isolated[:5]}")

    edges: List[Edge] = list(graph.edges())
    m = len(edges)
    horizontal = dimension - 1
    side = 1
    while side ** horizontal < 2 * m:
        side += 1
    order = snake_order(horizontal, side)

    slot_of: Dict[Tuple[int, Hashable], Point] = {}
    for i, (u, v) in enumerate(edges):
        slot_of[(i, u)] = order[2 * i]
        slot_of[(i, v)] = order[2 * i + 1]
    incident: Dict[Hashable, List[int]] = {v: [] for v in graph.nodes}
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)

    pairs = []
    owner: List[Hashable] = []
    position = 0
    for v in graph.nodes:
        for i in incident[v]:
            pairs.append((order[position], slot_of[(i, v)]))
            owner.append(v)
            position += 1

    wiring = wire_matching(
        WiringInstance(dimension, (side,) * horizontal, tuple(pairs)), length_factor=length_factor
    )
    branch: Dict[Hashable, set] = {v: set() for v in graph.nodes}
    for v, wire in zip(owner, wiring.wires):
        branch[v].update(wire)
    top = wiring.height
    witnesses = {
        (u, v): (slot_of[(i, u)] + (top,), slot_of[(i, v)] + (top,))
        for i, (u, v) in enumerate(edges)
    }
    logger.debug("Embedded %d vertices, %d edges in side %d, height %d", graph.number_of_nodes(), m, side, top)
    return MinorEmbedding(
        dimension=dimension,
        side=side,
        branch_sets={v: frozenset(points) for v, points in branch.items()},
        edge_witnesses=witnesses,
        wiring=wiring,
        stats={"edges": m, "side": side, "height": top, "grid_side": max(wiring.box)},
    )


def verify_minor(embedding: MinorEmbedding) -> List[str]:
    """Violations of the minor certificate; an empty list means valid."""
    problems: List[str] = []
    seen: Dict[Point, Hashable] = {}
    for v, points in embedding.branch_sets.items():
        if not points:
            problems.append(f"Branch set of {v} is empty")
            continue
        for point in points:
            other = seen.setdefault(point, v)
            if other != v:
                problems.append(f"Branch sets of {other} and {v} share {point}")
                break
        start = next(iter(points))
        reached = {start}
        stack = [start]
        while stack:
            for nb in _grid_neighbors(stack.pop()):
                if nb in points and nb not in reached:
                    reached.add(nb)
                    stack.append(nb)
        if len(reached) != len(points):
            problems.append(f"Branch set of {v} is disconnected")
    for (u, v), (a, b) in embedding.edge_witnesses.items():
        if a not in embedding.branch_sets.get(u, ()) or b not in embedding.branch_sets.get(v, ()):
            problems.append(f"Witness of edge ({u}, {v}) lies outside its branch sets")
        elif sum(abs(x - y) for x, y in zip(a, b)) != 1:
            problems.append(f"Witness points {a} and {b} of edge ({u}, {v}) are not adjacent")
    return problems
