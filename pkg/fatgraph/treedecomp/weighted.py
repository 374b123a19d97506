"""Weighted tree decompositions of contracted graphs."""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import networkx as nx

from fatgraph.contraction import ContractedGraph
from fatgraph.domain.errors import InvalidInputError
from fatgraph.separator.weights import get_weight_function

logger = logging.getLogger(__name__)

SeparatorFn = Callable[[Sequence[int]], Sequence[int]]


@dataclass
class WeightedTreeDecomposition:
    """Tree decomposition whose bags hold class indices."""
    bags: Dict[int, FrozenSet[int]]
    tree_edges: List[Tuple[int, int]]
    weights: Tuple[float, ...]
    weighted_width: float
    method: str = ""
    root: int = 0
    source_width: Optional[int] = None

    @classmethod
    def create(cls, bags: Dict[int, FrozenSet[int]], tree_edges: List[Tuple[int, int]],
               weights: Sequence[float], method: str = "", root: int = 0,
               source_width: Optional[int] = None) -> "WeightedTreeDecomposition":
        weights = tuple(weights)
        return cls(
            bags={b: frozenset(v) for b, v in bags.items()},
            tree_edges=[tuple(e) for e in tree_edges],
            weights=weights,
            weighted_width=bag_weight_width(bags, weights),
            method=method,
            root=root,
            source_width=source_width,
        )

    def tree(self) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(self.bags)
        tree.add_edges_from(self.tree_edges)
        return tree

    def to_dict(self) -> Dict:
        return {
            "method": self.method,
            "root": self.root,
            "bags": {str(b): sorted(v) for b, v in sorted(self.bags.items())},
            "tree_edges": [list(e) for e in self.tree_edges],
            "weights": list(self.weights),
            "weighted_width": self.weighted_width,
            "source_width": self.source_width,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "WeightedTreeDecomposition":
        try:
            bags = {int(b): frozenset(v) for b, v in data["bags"].items()}
            return cls(
                bags=bags,
                tree_edges=[(int(a), int(b)) for a, b in data["tree_edges"]],
                weights=tuple(data["weights"]),
                weighted_width=float(data["weighted_width"]),
                method=data.get("method", ""),
                root=int(data.get("root", min(bags, default=0))),
                source_width=data.get("source_width"),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidInputError(f"Malformed decomposition: {e}")


def bag_weight_width(bags: Dict[int, FrozenSet[int]], weights: Sequence[float]) -> float:
    """Maximum total node weight of a bag (no minus one)."""
    return max((sum(weights[v] for v in bag) for bag in bags.values()), default=0.0)


def _node_weights(contracted: ContractedGraph, gamma) -> Tuple[float, ...]:
    if gamma is None:
        return contracted.weights
    gamma = get_weight_function(gamma)
    return tuple(gamma(s) for s in contracted.sizes)


def decompose_by_separator(
    contracted: ContractedGraph,
    sep_fn: SeparatorFn,
    gamma=None,
    c: float = 4.0,
    dimension: int = 2,
) -> WeightedTreeDecomposition:
    """Recursive separator decomposition: separate, recurse on components, add S to all bags.

    Args:
        contracted: Contracted graph.
        sep_fn: Returns separator nodes for a node subset.
        gamma: Optional weight function overriding the contracted weights.
        c: Base-case constant; a subproblem of N original vertices whose total
            weight is at most c * N^(1 - 1/d) becomes a single bag.
        dimension: Ambient dimension d.

    Returns:
        Weighted tree decomposition rooted at the top-level hub bag.
    """
    weights = _node_weights(contracted, gamma)
    graph = contracted.to_networkx()
    bags: Dict[int, Set[int]] = {}
    edges: List[Tuple[int, int]] = []

    def new_bag(content) -> int:
        bag_id = len(bags)
        bags[bag_id] = set(content)
        return bag_id

    def build(nodes: FrozenSet[int]) -> Tuple[int, List[int]]:
        weight = sum(weights[v] for v in nodes)
        count = sum(contracted.sizes[v] for v in nodes)
        if len(nodes) <= 1 or weight <= c * count ** (1 - 1 / dimension):
            bag = new_bag(nodes)
            return bag, [bag]
        separator = frozenset(sep_fn(sorted(nodes))) & nodes
        rest = nodes - separator
        components = [frozenset(comp) for comp in nx.connected_components(graph.subgraph(rest))]
        if not separator and len(components) <= 1:
            logger.debug("Separator made no progress on %d nodes; using one bag", len(nodes))
            bag = new_bag(nodes)
            return bag, [bag]
        hub = new_bag(separator)
        subtree = [hub]
        for component in sorted(components, key=min):
            root, ids = build(component)
            for bag_id in ids:
                bags[bag_id] |= separator
            edges.append((hub, root))
            subtree.extend(ids)
        return hub, subtree

    if contracted.n == 0:
        new_bag(())
        root = 0
    else:
        root, _ = build(frozenset(range(contracted.n)))
    decomposition = WeightedTreeDecomposition.create(
        {b: frozenset(v) for b, v in bags.items()}, edges, weights, "separator", root
    )
    logger.debug("Separator decomposition: %d bags, weighted width %.3f",
                 len(bags), decomposition.weighted_width)
    return decomposition


def blowup(contracted: ContractedGraph, weights: Optional[Sequence[float]] = None) -> Tuple[nx.Graph, Dict[int, Tuple[int, ...]]]:
    """Replace node v by a clique of ceil(w(v)) vertices joined to its neighbors' cliques.

    Returns:
        The unweighted graph H and the clique of H vertices for every node.
    """
    weights = contracted.weights if weights is None else weights
    cliques: Dict[int, Tuple[int, ...]] = {}
    next_vertex = 0
    for node in range(contracted.n):
        size = max(1, math.ceil(weights[node] - 1e-9))
        cliques[node] = tuple(range(next_vertex, next_vertex + size))
        next_vertex += size

    graph = nx.Graph()
    graph.add_nodes_from(range(next_vertex))
    for node, clique in cliques.items():
        graph.add_edges_from((a, b) for i, a in enumerate(clique) for b in clique[i + 1:])
    for u, v in contracted.edges():
        graph.add_edges_from((a, b) for a in cliques[u] for b in cliques[v])
    return graph, cliques


def decompose_by_blowup(contracted: ContractedGraph, gamma=None) -> WeightedTreeDecomposition:
    """Min-fill tree decomposition of the blowup, mapped back to classes.

    A class belongs to a bag exactly when its whole clique does.
    """
    weights = _node_weights(contracted, gamma)
    graph, cliques = blowup(contracted, weights)
    if graph.number_of_nodes() == 0:
        return WeightedTreeDecomposition.create({0: frozenset()}, [], weights, "blowup", 0, 0)

    width, tree = nx.approximation.treewidth_min_fill_in(graph)
    ordered = sorted(tree.nodes, key=lambda bag: (len(bag), sorted(bag)))
    index = {bag: i for i, bag in enumerate(ordered)}
    bags = {
        index[bag]: frozenset(node for node, clique in cliques.items() if bag.issuperset(clique))
        for bag in ordered
    }
    edges = sorted(tuple(sorted((index[a], index[b]))) for a, b in tree.edges)
    decomposition = WeightedTreeDecomposition.create(bags, edges, weights, "blowup", 0, width)
    logger.debug("Blowup decomposition: H width %d, weighted width %.3f",
                 width, decomposition.weighted_width)
    return decomposition
