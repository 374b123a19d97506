"""Kappa-partitions from a maximal independent set, and contracted graphs."""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Sequence, Set, Tuple

import networkx as nx

from fatgraph.domain.errors import InvalidInputError
from fatgraph.geometry.graph import IntersectionGraph
from fatgraph.separator.weights import get_weight_function

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ContractedGraph:
    """One node per partition class, weighted by gamma(class size)."""
    adjacency: Tuple[FrozenSet[int], ...]
    weights: Tuple[float, ...]
    sizes: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def degrees(self) -> List[int]:
        return [len(a) for a in self.adjacency]

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in sorted(nbrs):
                if u < v:
                    yield (u, v)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for node, weight in enumerate(self.weights):
            graph.add_node(node, weight=weight, size=self.sizes[node])
        graph.add_edges_from(self.edges())
        return graph

    def total_weight(self, nodes) -> float:
        return sum(self.weights[v] for v in nodes)


@dataclass(frozen=True)
class KappaPartition:
    """Vertex classes, their clique covers and the contracted graph."""
    classes: Tuple[Tuple[int, ...], ...]
    class_of: Tuple[int, ...]
    clique_covers: Tuple[Tuple[Tuple[int, ...], ...], ...]
    contracted: ContractedGraph

    @property
    def kappa_hat(self) -> int:
        return max((len(c) for c in self.clique_covers), default=0)

    @property
    def delta_hat(self) -> int:
        return self.contracted.max_degree

    def to_dict(self) -> Dict:
        return {
            "classes": [list(c) for c in self.classes],
            "clique_covers": [[list(q) for q in cover] for cover in self.clique_covers],
            "kappa_hat": self.kappa_hat,
            "delta_hat": self.delta_hat,
            "contracted": {
                "edges": [list(e) for e in self.contracted.edges()],
                "weights": list(self.contracted.weights),
            },
        }


def greedy_mis(graph: IntersectionGraph) -> FrozenSet[int]:
    """Maximal independent set by scanning vertices in id order."""
    chosen: Set[int] = set()
    for v in range(graph.n):
        if not graph.neighbors(v) & chosen:
            chosen.add(v)
    return frozenset(chosen)


def greedy_clique_cover(graph: IntersectionGraph, members: Sequence[int]) -> List[Tuple[int, ...]]:
    """Cover a vertex set by cliques, each grown greedily in id order."""
    remaining = sorted(members)
    cover = []
    while remaining:
        clique = [remaining[0]]
        for v in remaining[1:]:
            if all(graph.has_edge(v, u) for u in clique):
                clique.append(v)
        cover.append(tuple(clique))
        taken = set(clique)
        remaining = [v for v in remaining if v not in taken]
    return cover


def contract(graph: IntersectionGraph, classes: Sequence[Sequence[int]], gamma="log") -> ContractedGraph:
    """Contract each class to one node, dropping loops and parallel edges.

    Raises:
        InvalidInputError: If the classes do not partition the vertex set.
    """
    gamma = get_weight_function(gamma)
    class_of = [-1] * graph.n
    for index, members in enumerate(classes):
        if not members:
            raise InvalidInputError(f"Class {index} is empty")
        for v in members:
            if not 0 <= v < graph.n:
                raise InvalidInputError(f"Class {index} contains unknown vertex {v}")
            if class_of[v] != -1:
                raise InvalidInputError(f"Vertex {v} appears in classes {class_of[v]} and {index}")
            class_of[v] = index
    missing = [v for v, c in enumerate(class_of) if c == -1]
    if missing:
        raise InvalidInputError(f"Vertices {missing[:10]} are not covered by any class")

    adjacency: List[Set[int]] = [set() for _ in classes]
    for u, v in graph.edges():
        cu, cv = class_of[u], class_of[v]
        if cu != cv:
            adjacency[cu].add(cv)
            adjacency[cv].add(cu)
    sizes = tuple(len(c) for c in classes)
    return ContractedGraph(
        adjacency=tuple(frozenset(a) for a in adjacency),
        weights=tuple(gamma(s) for s in sizes),
        sizes=sizes,
    )


def build_kappa_partition(graph: IntersectionGraph, gamma="log") -> KappaPartition:
    """Partition vertices into stars around a maximal independent set.

    Each non-MIS vertex joins its lowest-id MIS neighbor; classes are ordered by
    their MIS vertex.
    """
    mis = sorted(greedy_mis(graph))
    index_of = {s: i for i, s in enumerate(mis)}
    members: List[List[int]] = [[s] for s in mis]
    for v in range(graph.n):
        if v in index_of:
            continue
        anchor = min(u for u in graph.neighbors(v) if u in index_of)
        members[index_of[anchor]].append(v)
    classes = tuple(tuple(sorted(m)) for m in members)

    class_of = [0] * graph.n
    for index, cls in enumerate(classes):
        for v in cls:
            class_of[v] = index
    covers = tuple(tuple(greedy_clique_cover(graph, cls)) for cls in classes)
    partition = KappaPartition(
        classes=classes,
        class_of=tuple(class_of),
        clique_covers=covers,
        contracted=contract(graph, classes, gamma),
    )
    logger.debug(
        "Kappa partition: %d classes, kappa_hat=%d, delta_hat=%d",
        len(classes), partition.kappa_hat, partition.delta_hat,
    )
    return partition


def partition_from_classes(graph: IntersectionGraph, classes: Sequence[Sequence[int]], gamma="log") -> KappaPartition:
    """Rebuild a partition (covers and contraction) from stored classes."""
    contracted = contract(graph, classes, gamma)
    class_of = [0] * graph.n
    for index, cls in enumerate(classes):
        for v in cls:
            class_of[v] = index
    return KappaPartition(
        classes=tuple(tuple(sorted(c)) for c in classes),
        class_of=tuple(class_of),
        clique_covers=tuple(tuple(greedy_clique_cover(graph, cls)) for cls in classes),
        contracted=contracted,
    )


def class_neighborhoods(contracted: ContractedGraph, r: int) -> List[FrozenSet[int]]:
    """Classes within contracted distance at most r of each class (itself included)."""
    graph = contracted.to_networkx()
    return [
        frozenset(nx.single_source_shortest_path_length(graph, node, cutoff=r))
        for node in range(contracted.n)
    ]
