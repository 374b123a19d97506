"""Tests for the kappa-partition and the contracted graph."""

import networkx as nx
import pytest

from fatgraph.contraction import (
    build_kappa_partition,
    class_neighborhoods,
    contract,
    greedy_clique_cover,
    greedy_mis,
    partition_from_classes,
)
from fatgraph.domain.errors import InvalidInputError

from tests.conftest import graph_of


def test_greedy_mis_on_path(path5):
    """Test the id-order maximal independent set of a path."""
    assert greedy_mis(path5) == frozenset({0, 2, 4})
    assert greedy_mis(graph_of(nx.path_graph(3))) == frozenset({0, 2})


def test_complete_graph_is_one_class(k5):
    """Test that K5 contracts to a single isolated node."""
    partition = build_kappa_partition(k5)
    assert partition.classes == ((0, 1, 2, 3, 4),)
    assert partition.kappa_hat == 1
    assert partition.delta_hat == 0


def test_path_classes_follow_lowest_anchor():
    """Test that P4 splits into {0, 1} and {2, 3}."""
    partition = build_kappa_partition(graph_of(nx.path_graph(4)))
    assert partition.classes == ((0, 1), (2, 3))
    assert partition.class_of == (0, 0, 1, 1)
    assert list(partition.contracted.edges()) == [(0, 1)]
    assert partition.contracted.sizes == (2, 2)


def test_clique_cover_of_class(path5):
    """Test that a path class needs two cliques when it is not a clique."""
    assert greedy_clique_cover(path5, [0, 1, 2]) == [(0, 1), (2,)]


def test_contract_weights_use_gamma():
    """Test contracted node weights for the log and unit functions."""
    graph = graph_of(nx.path_graph(4))
    assert contract(graph, [[0, 1, 2], [3]]).weights == (2.0, 1.0)
    assert contract(graph, [[0, 1, 2], [3]], "unit").weights == (1.0, 1.0)


def test_contract_rejects_bad_classes():
    """Test overlapping, missing and empty classes."""
    graph = graph_of(nx.path_graph(3))
    with pytest.raises(InvalidInputError):
        contract(graph, [[0, 1], [1, 2]])
    with pytest.raises(InvalidInputError):
        contract(graph, [[0, 1]])
    with pytest.raises(InvalidInputError):
        contract(graph, [[0, 1, 2], []])
    with pytest.raises(InvalidInputError):
        contract(graph, [[0, 1, 2, 3]])


def test_partition_round_trip_from_classes(random_disks):
    """Test rebuilding a partition from its stored classes."""
    _, graph = random_disks(40, seed=2)
    partition = build_kappa_partition(graph)
    again = partition_from_classes(graph, partition.classes)
    assert again.classes == partition.classes
    assert again.contracted == partition.contracted
    assert again.to_dict()["kappa_hat"] == partition.kappa_hat


def test_partition_classes_are_stars(random_disks):
    """Test that every class has a diameter of at most two."""
    _, graph = random_disks(50, seed=7)
    partition = build_kappa_partition(graph)
    seen = sorted(v for cls in partition.classes for v in cls)
    assert seen == list(range(graph.n))
    for cls in partition.classes:
        sub = graph.induced(cls)
        assert nx.is_connected(sub)
        assert nx.diameter(sub) <= 2


def test_class_neighborhoods_by_radius():
    """Test contracted balls of radius 0, 1 and 2 on a path of classes."""
    partition = build_kappa_partition(graph_of(nx.path_graph(6)))
    contracted = partition.contracted
    assert contracted.n == 3
    assert class_neighborhoods(contracted, 0)[0] == frozenset({0})
    assert class_neighborhoods(contracted, 1)[0] == frozenset({0, 1})
    assert class_neighborhoods(contracted, 2)[0] == frozenset({0, 1, 2})
