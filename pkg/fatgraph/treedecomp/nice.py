"""Traditional (nice) tree decompositions over original vertices."""

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from fatgraph.contraction import KappaPartition
from fatgraph.domain.errors import InvalidInputError
from fatgraph.treedecomp.weighted import WeightedTreeDecomposition

LEAF = "leaf"
INTRODUCE = "introduce"
FORGET = "forget"
JOIN = "join"


@dataclass(frozen=True)
class NiceNode:
    kind: str
    bag: FrozenSet[int]
    vertex: Optional[int] = None
    children: Tuple[int, ...] = ()


@dataclass
class TraditionalTreeDecomposition:
    """Nice decomposition stored in postorder; the last node is the root."""
    nodes: List[NiceNode]

    @property
    def root(self) -> int:
        return len(self.nodes) - 1

    @property
    def width(self) -> int:
        return max((len(node.bag) for node in self.nodes), default=0) - 1

    def tree(self) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(range(len(self.nodes)))
        for index, node in enumerate(self.nodes):
            tree.add_edges_from((index, child) for child in node.children)
        return tree

    def to_dict(self) -> Dict:
        return {
            "nodes": [
                {
                    "kind": node.kind,
                    "bag": sorted(node.bag),
                    "vertex": node.vertex,
                    "children": list(node.children),
                }
                for node in self.nodes
            ]
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "TraditionalTreeDecomposition":
        try:
            return cls([
                NiceNode(
                    kind=entry["kind"],
                    bag=frozenset(int(v) for v in entry["bag"]),
                    vertex=entry.get("vertex"),
                    children=tuple(int(c) for c in entry.get("children", ())),
                )
                for entry in data["nodes"]
            ])
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidInputError(f"Malformed nice decomposition: {e}")


class _Builder:
    def __init__(self, partition: KappaPartition):
        self.partition = partition
        self.nodes: List[NiceNode] = []

    def add(self, kind: str, bag: FrozenSet[int], vertex: Optional[int] = None,
            children: Tuple[int, ...] = ()) -> int:
        self.nodes.append(NiceNode(kind, frozenset(bag), vertex, children))
        return len(self.nodes) - 1

    def forget_classes(self, top: int, classes) -> int:
        for cls in sorted(classes):
            for v in self.partition.classes[cls]:
                top = self.add(FORGET, self.nodes[top].bag - {v}, v, (top,))
        return top

    def introduce_classes(self, top: int, classes) -> int:
        for cls in sorted(classes):
            for v in self.partition.classes[cls]:
                top = self.add(INTRODUCE, self.nodes[top].bag | {v}, v, (top,))
        return top


def to_traditional(decomposition: WeightedTreeDecomposition, partition: KappaPartition) -> TraditionalTreeDecomposition:
    """Expand class bags into a nice decomposition with binary joins.

    Every class is introduced and forgotten as a contiguous run in vertex id
    order, and the root bag is empty.
    """
    builder = _Builder(partition)
    adjacency: Dict[int, List[int]] = {b: [] for b in decomposition.bags}
    for a, b in decomposition.tree_edges:
        adjacency[a].append(b)
        adjacency[b].append(a)

    root = decomposition.root if decomposition.root in adjacency else min(adjacency, default=None)
    if root is None:
        builder.add(LEAF, frozenset())
        return TraditionalTreeDecomposition(builder.nodes)

    order, parent = [], {root: None}
    queue = deque([root])
    while queue:
        node = queue.popleft()
        order.append(node)
        for nxt in sorted(adjacency[node]):
            if nxt not in parent:
                parent[nxt] = node
                queue.append(nxt)

    children: Dict[int, List[int]] = {b: [] for b in order}
    for node in order:
        if parent[node] is not None:
            children[parent[node]].append(node)

    top_of: Dict[int, int] = {}
    for node in reversed(order):
        classes = decomposition.bags[node]
        tops = []
        for child in children[node]:
            child_classes = decomposition.bags[child]
            top = builder.forget_classes(top_of.pop(child), child_classes - classes)
            top = builder.introduce_classes(top, classes - child_classes)
            tops.append(top)
        if not tops:
            top = builder.introduce_classes(builder.add(LEAF, frozenset()), classes)
        else:
            top = tops[0]
            for other in tops[1:]:
                top = builder.add(JOIN, builder.nodes[top].bag, None, (top, other))
        top_of[node] = top

    builder.forget_classes(top_of[root], decomposition.bags[root])
    return TraditionalTreeDecomposition(builder.nodes)
