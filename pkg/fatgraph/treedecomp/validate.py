"""Validators for weighted and nice tree decompositions."""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from fatgraph.contraction import ContractedGraph
from fatgraph.geometry.graph import IntersectionGraph
from fatgraph.treedecomp.nice import FORGET, INTRODUCE, JOIN, LEAF, TraditionalTreeDecomposition
from fatgraph.treedecomp.weighted import WeightedTreeDecomposition

WIDTH_TOLERANCE = 1e-9


@dataclass
class DecompositionReport:
    violations: List[str] = field(default_factory=list)
    width: int = -1
    weighted_width: Optional[float] = None

    @property
    def ok(self) -> bool:
        return not self.violations


def _check_axioms(
    tree: nx.Graph,
    bags: Dict[int, FrozenSet[int]],
    vertices: Iterable[int],
    edges: Iterable[Tuple[int, int]],
    report: DecompositionReport,
) -> None:
    if tree.number_of_nodes() == 0:
        report.violations.append("decomposition has no bags")
        return
    if not nx.is_tree(tree):
        report.violations.append("decomposition graph is not a tree")

    occurrences: Dict[int, List[int]] = {}
    for bag_id, bag in bags.items():
        for v in bag:
            occurrences.setdefault(v, []).append(bag_id)

    for v in vertices:
        if v not in occurrences:
            report.violations.append(f"vertex {v} is in no bag")
    for u, v in edges:
        if not any(v in bags[b] for b in occurrences.get(u, [])):
            report.violations.append(f"edge ({u}, {v}) is in no bag")
    for v, bag_ids in sorted(occurrences.items()):
        if len(bag_ids) > 1 and not nx.is_connected(tree.subgraph(bag_ids)):
            report.violations.append(f"bags containing {v} are not connected in the tree")


def validate_nice(decomposition: TraditionalTreeDecomposition, graph: IntersectionGraph) -> DecompositionReport:
    """Check the leaf/introduce/forget/join grammar and the decomposition axioms."""
    report = DecompositionReport(width=decomposition.width)
    nodes = decomposition.nodes
    for index, node in enumerate(nodes):
        if any(child >= index for child in node.children):
            report.violations.append(f"node {index} has a child that is not earlier in postorder")
            continue
        kids = [nodes[c].bag for c in node.children]
        if node.kind == LEAF:
            if node.children or node.bag:
                report.violations.append(f"leaf {index} must be childless with an empty bag")
        elif node.kind == INTRODUCE:
            if len(kids) != 1 or node.vertex in kids[0] or node.bag != kids[0] | {node.vertex}:
                report.violations.append(f"introduce node {index} of {node.vertex} is malformed")
        elif node.kind == FORGET:
            if len(kids) != 1 or node.vertex not in kids[0] or node.bag != kids[0] - {node.vertex}:
                report.violations.append(f"forget node {index} of {node.vertex} is malformed")
        elif node.kind == JOIN:
            if len(kids) != 2 or kids[0] != node.bag or kids[1] != node.bag:
                report.violations.append(f"join node {index} is malformed")
        else:
            report.violations.append(f"node {index} has unknown kind {node.kind!r}")
    if nodes and nodes[-1].bag:
        report.violations.append("root bag is not empty")

    bags = {i: node.bag for i, node in enumerate(nodes)}
    _check_axioms(decomposition.tree(), bags, range(graph.n), graph.edges(), report)
    return report


def validate_decomposition(decomposition, graph) -> DecompositionReport:
    """Validate a decomposition against its graph; never raises.

    Args:
        decomposition: WeightedTreeDecomposition (with a ContractedGraph) or
            TraditionalTreeDecomposition (with an IntersectionGraph).
        graph: The graph the decomposition claims to decompose.

    Returns:
        Report with violations and recomputed widths.
    """
    try:
        if isinstance(decomposition, TraditionalTreeDecomposition):
            return validate_nice(decomposition, graph)

        report = DecompositionReport()
        if not isinstance(decomposition, WeightedTreeDecomposition):
            report.violations.append(f"unsupported decomposition type {type(decomposition).__name__}")
            return report
        bags = decomposition.bags
        report.width = max((len(b) for b in bags.values()), default=0) - 1
        weights = decomposition.weights
        if isinstance(graph, ContractedGraph) and len(weights) != graph.n:
            report.violations.append(f"{len(weights)} weights for {graph.n} nodes")
            return report
        report.weighted_width = max(
            (sum(weights[v] for v in bag) for bag in bags.values()), default=0.0
        )
        if abs(report.weighted_width - decomposition.weighted_width) > WIDTH_TOLERANCE:
            report.violations.append(
                f"stored weighted width {decomposition.weighted_width} differs from "
                f"recomputed {report.weighted_width}"
            )
        _check_axioms(decomposition.tree(), bags, range(graph.n), graph.edges(), report)
        return report
    except Exception as e:  # validators report, never raise
        return DecompositionReport(violations=[f"validation failed: {e}"])
