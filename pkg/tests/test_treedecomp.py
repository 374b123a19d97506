"""Tests for weighted and nice tree decompositions."""

import math
import statistics

import networkx as nx
import pytest

from fatgraph.contraction import ContractedGraph, build_kappa_partition
from fatgraph.domain.errors import InvalidInputError, UnsupportedError
from fatgraph.geometry.graph import build_intersection_graph
from fatgraph.treedecomp import (
    FORGET,
    INTRODUCE,
    JOIN,
    LEAF,
    NiceNode,
    TraditionalTreeDecomposition,
    WeightedTreeDecomposition,
    blowup,
    decompose_by_blowup,
    prepare_decomposition,
    to_traditional,
    validate_decomposition,
    validate_nice,
)
from fatgraph.treedecomp.pipeline import weighted_decomposition

from tests.conftest import graph_of, random_objects


def _contracted(weights, edges=()):
    adjacency = [set() for _ in weights]
    for u, v in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    return ContractedGraph(
        adjacency=tuple(frozenset(a) for a in adjacency),
        weights=tuple(weights),
        sizes=tuple(1 for _ in weights),
    )


def test_blowup_of_single_node_is_clique():
    """Test that a node of weight 3 blows up into a triangle."""
    graph, cliques = blowup(_contracted([3.0]))
    assert nx.is_isomorphic(graph, nx.complete_graph(3))
    assert cliques == {0: (0, 1, 2)}


def test_blowup_of_edge_joins_cliques():
    """Test that an edge between weight-2 nodes blows up into K4."""
    graph, _ = blowup(_contracted([2.0, 2.0], [(0, 1)]))
    assert nx.is_isomorphic(graph, nx.complete_graph(4))


def test_blowup_rounds_weights_up():
    """Test fractional weights and the minimum clique size of one."""
    _, cliques = blowup(_contracted([1.5, 0.0]))
    assert len(cliques[0]) == 2
    assert len(cliques[1]) == 1


def test_blowup_decomposition_of_path():
    """Test the weighted width of a contracted path with unit weights."""
    contracted = _contracted([1.0, 1.0, 1.0], [(0, 1), (1, 2)])
    decomposition = decompose_by_blowup(contracted)
    assert decomposition.weighted_width == 2.0
    assert validate_decomposition(decomposition, contracted).ok


@pytest.mark.parametrize("method", ["blowup", "separator"])
def test_prepared_decompositions_are_valid(method):
    """Test both methods on random instances against their graphs."""
    for seed in range(3):
        objects = random_objects(2, 40, seed, shape_mix="mixed", size_ratio=2.0)
        graph = build_intersection_graph(objects)
        prepared = prepare_decomposition(graph, method=method, objects=objects)
        weighted = validate_decomposition(prepared.weighted, prepared.partition.contracted)
        assert weighted.ok, weighted.violations
        nice = validate_nice(prepared.nice, graph)
        assert nice.ok, nice.violations
        assert prepared.nice.nodes[-1].bag == frozenset()


def test_nice_decomposition_grammar(path5):
    """Test that the nice decomposition uses only the four node kinds."""
    prepared = prepare_decomposition(path5)
    kinds = {node.kind for node in prepared.nice.nodes}
    assert kinds <= {LEAF, INTRODUCE, FORGET, JOIN}
    forgotten = sorted(node.vertex for node in prepared.nice.nodes if node.kind == FORGET)
    assert forgotten == list(range(path5.n))


def test_nice_bags_are_unions_of_classes(random_disks):
    """Test that a nice bag never splits a class across its boundary."""
    _, graph = random_disks(30, seed=5)
    partition = build_kappa_partition(graph)
    nice = to_traditional(decompose_by_blowup(partition.contracted), partition)
    report = validate_nice(nice, graph)
    assert report.ok, report.violations
    assert report.width >= 0


def test_separator_method_needs_geometry(path5):
    """Test that the separator method without objects is unsupported."""
    partition = build_kappa_partition(path5)
    with pytest.raises(UnsupportedError):
        weighted_decomposition(partition, method="separator")
    with pytest.raises(InvalidInputError):
        weighted_decomposition(partition, method="greedy")


def test_validator_reports_missing_edge():
    """Test that a decomposition missing an edge is reported."""
    graph = graph_of(nx.path_graph(3))
    nice = TraditionalTreeDecomposition([
        NiceNode(LEAF, frozenset()),
        NiceNode(INTRODUCE, frozenset({0}), 0, (0,)),
        NiceNode(INTRODUCE, frozenset({0, 1}), 1, (1,)),
        NiceNode(FORGET, frozenset({1}), 0, (2,)),
        NiceNode(FORGET, frozenset(), 1, (3,)),
        NiceNode(LEAF, frozenset()),
        NiceNode(INTRODUCE, frozenset({2}), 2, (5,)),
        NiceNode(FORGET, frozenset(), 2, (6,)),
        NiceNode(JOIN, frozenset(), None, (4, 7)),
    ])
    report = validate_nice(nice, graph)
    assert not report.ok
    assert any("edge (1, 2)" in v for v in report.violations)


def test_validator_reports_bad_introduce():
    """Test that an introduce node adding two vertices is malformed."""
    graph = graph_of(nx.path_graph(2))
    nice = TraditionalTreeDecomposition([
        NiceNode(LEAF, frozenset()),
        NiceNode(INTRODUCE, frozenset({0, 1}), 0, (0,)),
    ])
    report = validate_nice(nice, graph)
    assert any("introduce node 1" in v for v in report.violations)
    assert any("root bag" in v for v in report.violations)


def test_validator_never_raises():
    """Test that an unsupported object becomes a violation."""
    report = validate_decomposition(object(), graph_of(nx.path_graph(2)))
    assert not report.ok


def test_stored_width_mismatch_is_reported():
    """Test that a tampered weighted width is caught."""
    contracted = _contracted([1.0, 1.0], [(0, 1)])
    decomposition = decompose_by_blowup(contracted)
    decomposition.weighted_width = 5.0
    report = validate_decomposition(decomposition, contracted)
    assert any("weighted width" in v for v in report.violations)


def test_decomposition_documents_round_trip(path5):
    """Test loading both decomposition documents."""
    prepared = prepare_decomposition(path5)
    weighted = WeightedTreeDecomposition.from_dict(prepared.weighted.to_dict())
    assert weighted.bags == prepared.weighted.bags
    nice = TraditionalTreeDecomposition.from_dict(prepared.nice.to_dict())
    assert nice.nodes == prepared.nice.nodes
    with pytest.raises(InvalidInputError):
        WeightedTreeDecomposition.from_dict({"bags": {}})
    with pytest.raises(InvalidInputError):
        TraditionalTreeDecomposition.from_dict({"nodes": [{"bag": []}]})


def _median_width_ratio(n, seeds):
    ratios = []
    for seed in seeds:
        objects = random_objects(2, n, seed)
        partition = build_kappa_partition(build_intersection_graph(objects))
        decomposition = weighted_decomposition(partition, method="separator", objects=objects)
        report = validate_decomposition(decomposition, partition.contracted)
        assert report.ok, report.violations
        ratios.append(decomposition.weighted_width / math.sqrt(n))
    return statistics.median(ratios)


def test_separator_width_scales_with_sqrt_n():
    """Test that median weighted width / sqrt(n) grows by at most 1.5x from n = 100."""
    ratios = [_median_width_ratio(n, range(3)) for n in (100, 200, 400)]
    assert ratios[-1] <= 1.5 * ratios[0]
