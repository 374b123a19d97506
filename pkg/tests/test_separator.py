"""Tests for base hypercubes, clique covers and separators."""

import math
import statistics
from fractions import Fraction
from itertools import combinations

import pytest

from fatgraph.contraction import build_kappa_partition
from fatgraph.domain.errors import InvalidInputError, UnsupportedError
from fatgraph.geometry.graph import build_intersection_graph
from fatgraph.geometry.objects import Ball, ObjectSet
from fatgraph.separator import (
    Hypercube,
    WeightFunction,
    WeightRegistry,
    balance_threshold,
    build_candidate_shells,
    build_separator,
    clique_cover_size_class,
    find_base_hypercube,
    get_weight_function,
    max_size_class,
    separator_for_contraction,
    shell_count,
    size_class,
)
from fatgraph.separator.builder import balance_ok
from fatgraph.separator.cliques import dyadic_at_most, is_large, lowest_grid_point

from tests.conftest import random_objects


def test_weight_functions():
    """Test the registered weight functions at small sizes."""
    log = get_weight_function("log")
    assert log(0) == 0
    assert log(1) == 1
    assert log(3) == 2
    assert log.ceil(0) == 1
    assert get_weight_function("unit")(5) == 1.0
    assert get_weight_function("SQRT")(9) == 3.0
    assert get_weight_function(None) is log


def test_weight_function_errors():
    """Test unknown names, negative sizes and bad registrations."""
    with pytest.raises(InvalidInputError):
        get_weight_function("cubic")
    with pytest.raises(InvalidInputError):
        get_weight_function("log")(-1)
    with pytest.raises(TypeError):
        WeightRegistry.register(lambda t: t)


def test_register_weight_function():
    """Test that a registered function is found by name."""
    WeightRegistry.register(WeightFunction("double", lambda t: 2.0 * t))
    assert get_weight_function("double")(3) == 6.0
    assert "double" in WeightRegistry.list_functions()


def test_balance_threshold_and_shell_count():
    """Test ceil(n / (6^d + 1)) and ceil(n^(1/d))."""
    assert balance_threshold(7, 2) == 1
    assert balance_threshold(74, 2) == 2
    assert shell_count(1, 2) == 1
    assert shell_count(27, 3) == 3
    assert shell_count(28, 3) == 4
    assert shell_count(10, 2) == 4


def test_candidate_shells_grow_to_three_times_base():
    """Test that the outermost shell has three times the base side."""
    shells = build_candidate_shells(Hypercube((0, 0), 2), n=4)
    assert [h.side for h in shells] == [4, 6]
    assert all(h.center == (0, 0) for h in shells)


def test_hypercube_rejects_nonpositive_side():
    """Test hypercube validation."""
    with pytest.raises(InvalidInputError):
        Hypercube((0, 0), 0)


def test_base_hypercube_of_disk_row(disk_row):
    """Test that the base hypercube of unit disks has side 2."""
    for exact in (True, False):
        h0 = find_base_hypercube(disk_row, exact=exact)
        assert h0.side == 2


def test_base_hypercube_contains_enough_objects():
    """Test the containment threshold on random instances."""
    for seed in range(5):
        objects = random_objects(2, 60, seed, size_ratio=3.0)
        h0 = find_base_hypercube(objects)
        inside = sum(1 for o in objects if h0.contains_box(*o.bounds()))
        assert inside >= balance_threshold(len(objects), 2)


@pytest.mark.parametrize("dimension,n", [(2, 120), (2, 200), (3, 150)])
def test_heuristic_base_hypercube_is_feasible(dimension, n):
    """Test that the lattice sweep returns a containing hypercube no smaller than the optimum."""
    for seed in range(3):
        objects = random_objects(dimension, n, seed, shape_mix="mixed", size_ratio=2.0)
        heuristic = find_base_hypercube(objects, exact=False)
        inside = sum(1 for o in objects if heuristic.contains_box(*o.bounds()))
        assert inside >= balance_threshold(n, dimension)
        assert heuristic.side >= find_base_hypercube(objects, exact=True).side


def test_base_hypercube_switches_to_heuristic_above_limit():
    """Test that exact_limit picks the search mode when none is forced."""
    objects = random_objects(2, 60, 1)
    assert find_base_hypercube(objects, exact_limit=10) == find_base_hypercube(objects, exact=False)
    assert find_base_hypercube(objects) == find_base_hypercube(objects, exact=True)


def test_base_hypercube_empty_raises():
    """Test that an empty set has no base hypercube."""
    with pytest.raises(InvalidInputError):
        find_base_hypercube(ObjectSet(2, ()))


def test_size_classes():
    """Test size class boundaries for unit balls."""
    assert size_class(Ball((0, 0), 1), 16, 2) == 4
    assert size_class(Ball((0, 0), "1/16"), 16, 2) == 0
    assert max_size_class(16, 2) == 0
    assert max_size_class(1, 2) == -2


@pytest.mark.parametrize("dimension", [2, 3])
def test_small_objects_stay_within_max_size_class(dimension):
    """Test that an object just below the large threshold never exceeds s_max."""
    ball = Ball((0,) * dimension, Fraction(1, 8) - Fraction(1, 10 ** 6))
    assert not is_large(ball)
    for n in (2, 16, 100, 1000, 3200):
        assert size_class(ball, n, dimension) <= max(0, max_size_class(n, dimension))


def test_separator_rejects_size_class_overflow(monkeypatch, disk_row):
    """Test that a size class above s_max is reported instead of covered."""
    monkeypatch.setattr("fatgraph.separator.builder.size_class", lambda obj, n, d: 99)
    monkeypatch.setattr("fatgraph.separator.builder.is_large", lambda obj: False)
    with pytest.raises(InvalidInputError, match="exceed s_max"):
        build_separator(disk_row)


def test_lowest_grid_point_is_lexicographic():
    """Test that the lexicographically smallest lattice point is chosen."""
    assert lowest_grid_point((0, 0), Fraction(1, 2), Fraction(1)) == (0, 0)
    assert lowest_grid_point((Fraction(1, 2), 0), Fraction(1, 2), Fraction(1)) == (0, 0)
    assert lowest_grid_point((Fraction(1, 2), Fraction(1, 2)), Fraction(1, 4), Fraction(1)) is None


def test_dyadic_spacing():
    """Test the largest power of two below a bound."""
    assert dyadic_at_most(3.0) == 2
    assert dyadic_at_most(0.5) == Fraction(1, 2)
    assert dyadic_at_most(0.3) == Fraction(1, 4)
    with pytest.raises(InvalidInputError):
        dyadic_at_most(0)


def test_clique_cover_rejects_wrong_class():
    """Test that objects outside the requested size class are rejected."""
    with pytest.raises(InvalidInputError):
        clique_cover_size_class([ObjectSet.from_shapes([Ball((0, 0), 1)], 2)[0]], 1, 16)


def _check_separator(objects, separator):
    graph = build_intersection_graph(objects)
    vertices = separator.vertices()
    assert vertices | separator.side_a | separator.side_b == set(range(len(objects)))
    assert not vertices & separator.side_a
    assert not vertices & separator.side_b
    assert not separator.side_a & separator.side_b
    for u in separator.side_a:
        assert not graph.neighbors(u) & separator.side_b
    for clique in separator.cliques:
        for u, v in combinations(clique, 2):
            assert graph.has_edge(u, v)
    # with an exact base hypercube every shell is balanced, so the lightest one wins
    largest = max(len(separator.side_a), len(separator.side_b))
    assert balance_ok(largest, len(objects), objects.dimension)
    assert separator.balanced
    assert separator.balance == Fraction(largest, len(objects))
    assert separator.weight == min(separator.candidate_weights)
    assert separator.candidate_weights.index(separator.weight) == separator.shell_index - 1


def _clustered_objects(dimension, seed):
    dense = random_objects(dimension, 50, seed, region_side=3.0)
    sparse = random_objects(dimension, 30, seed + 100, region_side=60.0, size_ratio=2.0)
    shapes = [o.shape for o in dense] + [o.shape for o in sparse]
    return ObjectSet.from_shapes(shapes, dimension)


@pytest.mark.parametrize("dimension", [2, 3])
def test_separator_splits_random_instances(dimension):
    """Test separation, clique cover and reported weight on random instances."""
    for seed in range(4):
        objects = random_objects(dimension, 80, seed, shape_mix="mixed", size_ratio=2.0)
        separator = build_separator(objects)
        _check_separator(objects, separator)
        gamma = get_weight_function("log")
        assert math.isclose(separator.weight, sum(gamma(len(c)) for c in separator.cliques))
        assert separator.weight in separator.candidate_weights
        assert separator.hypercube.side > 0


@pytest.mark.parametrize("dimension", [2, 3])
@pytest.mark.parametrize("n", [12, 40, 120])
def test_separator_balance_sweep(dimension, n):
    """Test balance and minimum weight over seeded uniform instances."""
    for seed in range(5):
        objects = random_objects(dimension, n, seed, shape_mix="mixed", size_ratio=2.0)
        _check_separator(objects, build_separator(objects))


@pytest.mark.parametrize("dimension", [2, 3])
def test_separator_balance_on_clustered_instances(dimension):
    """Test balance when most objects crowd into one small region."""
    for seed in range(4):
        objects = _clustered_objects(dimension, seed)
        _check_separator(objects, build_separator(objects))


def _median_weight_ratio(n, seeds, **kwargs):
    return statistics.median(
        build_separator(random_objects(2, n, seed), **kwargs).weight / math.sqrt(n)
        for seed in seeds
    )


def test_separator_weight_scales_with_sqrt_n():
    """Test that median weight / sqrt(n) does not grow by more than 1.5x from n = 100."""
    exact = [_median_weight_ratio(n, range(3)) for n in (100, 200, 400)]
    assert exact[-1] <= 1.5 * exact[0]
    heuristic = [_median_weight_ratio(n, range(3), exact_h0=False) for n in (100, 400, 1600, 3200)]
    assert heuristic[-1] <= 1.5 * heuristic[0]


def test_separator_of_single_object():
    """Test the degenerate one-object instance."""
    objects = ObjectSet.from_shapes([Ball((0, 0), 1)], 2)
    separator = build_separator(objects)
    _check_separator(objects, separator)


def test_separator_document_fields(disk_row):
    """Test the separator document layout."""
    data = build_separator(disk_row).to_dict()
    assert set(data) >= {"cliques", "side_a", "side_b", "weight", "balance", "balanced"}
    assert data["side_a"] == sorted(data["side_a"])


def test_contraction_separator_splits_classes():
    """Test that no contracted edge crosses the two sides."""
    objects = random_objects(2, 60, 3)
    graph = build_intersection_graph(objects)
    partition = build_kappa_partition(graph)
    separator = separator_for_contraction(partition, objects)
    contracted = partition.contracted
    for c in separator.side_a:
        assert not contracted.adjacency[c] & separator.side_b
    covered = separator.vertices() | separator.side_a | separator.side_b
    assert covered == set(range(contracted.n))


def test_contraction_separator_needs_geometry():
    """Test that a missing or mismatched geometry is unsupported."""
    objects = random_objects(2, 10, 0)
    partition = build_kappa_partition(build_intersection_graph(objects))
    with pytest.raises(UnsupportedError):
        separator_for_contraction(partition, None)
    with pytest.raises(UnsupportedError):
        separator_for_contraction(partition, random_objects(2, 11, 0))
