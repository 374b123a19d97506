"""Tests for the exact solvers against known optima and the oracle."""

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from fatgraph.domain.errors import InvalidInputError, UnsupportedError
from fatgraph.domain.types import ProblemInstance
from fatgraph.geometry.graph import build_intersection_graph
from fatgraph.oracle import brute_force
from fatgraph.solvers import SolverRegistry, is_feasible, solve, verify_witness
from fatgraph.solvers.base import BaseSolver
from fatgraph.treedecomp import prepare_decomposition

from tests.conftest import instance_of, random_objects


@pytest.mark.parametrize("graph,problem,expected", [
    (nx.complete_graph(5), "is", 1),
    (nx.complete_graph(5), "vc", 4),
    (nx.cycle_graph(5), "is", 2),
    (nx.cycle_graph(5), "vc", 3),
    (nx.path_graph(5), "is", 3),
    (nx.star_graph(5), "ds", 1),
    (nx.path_graph(6), "ds", 2),
    (nx.complete_graph(4), "mif", 2),
    (nx.complete_graph(4), "fvs", 2),
    (nx.balanced_tree(2, 2), "mif", 7),
    (nx.balanced_tree(2, 2), "fvs", 0),
    (nx.cycle_graph(5), "fvs", 1),
    (nx.star_graph(4), "cvc", 1),
    (nx.path_graph(4), "cvc", 2),
    (nx.cycle_graph(6), "cvc", 5),
])
def test_known_optima(graph, problem, expected):
    """Test solver optima on small named graphs."""
    inst = instance_of(graph, problem)
    result = solve(inst)
    assert result.optimum == expected
    assert verify_witness(inst, result.witness, expected)


def test_r_domination_on_cycle():
    """Test that two vertices 2-dominate a six-cycle and one does not."""
    inst = instance_of(nx.cycle_graph(6), "rds", r=2)
    assert solve(inst).optimum == 2
    assert solve(instance_of(nx.cycle_graph(5), "rds", r=2)).optimum == 1


def test_plain_domination_ignores_radius():
    """Test that the ds problem always uses radius one."""
    inst = instance_of(nx.cycle_graph(6), "ds", r=3)
    assert inst.r == 1
    assert solve(inst).optimum == 2


def test_steiner_on_path_and_clique():
    """Test Steiner trees spanning terminals on a path and in K4."""
    result = solve(instance_of(nx.path_graph(5), "steiner", terminals=(0, 2)))
    assert result.optimum == 3
    assert result.witness == frozenset({0, 1, 2})
    assert solve(instance_of(nx.complete_graph(4), "steiner", terminals=(1, 3))).optimum == 2


def test_steiner_budget_is_reported():
    """Test the decision form of the Steiner tree problem."""
    inst = instance_of(nx.path_graph(5), "steiner", terminals=(0, 4), budget=4)
    stats = solve(inst).stats
    assert stats["budget"] == 4
    assert stats["within_budget"] is False


def test_steiner_needs_terminals():
    """Test that an empty terminal set is rejected."""
    with pytest.raises(InvalidInputError):
        solve(instance_of(nx.path_graph(3), "steiner"))


def test_steiner_across_components_is_infeasible():
    """Test terminals in different components."""
    graph = nx.disjoint_union(nx.path_graph(2), nx.path_graph(2))
    result = solve(instance_of(graph, "steiner", terminals=(0, 3)))
    assert not result.feasible
    assert result.optimum is None


def test_connected_vertex_cover_special_cases():
    """Test edgeless graphs and edges in two components."""
    edgeless = solve(instance_of(nx.empty_graph(3), "cvc"))
    assert edgeless.optimum == 0
    split = solve(instance_of(nx.disjoint_union(nx.path_graph(2), nx.path_graph(2)), "cvc"))
    assert not split.feasible


def test_witness_predicates():
    """Test feasibility checks on hand-picked witnesses."""
    inst = instance_of(nx.path_graph(4), "is")
    assert is_feasible(inst, {0, 2})
    assert not is_feasible(inst, {0, 1})
    assert not is_feasible(inst, {7})
    assert not verify_witness(inst, {0, 2}, optimum=3)
    fvs = instance_of(nx.cycle_graph(4), "fvs")
    assert is_feasible(fvs, {0})
    assert not is_feasible(fvs, set())


def test_registry_errors():
    """Test unknown problems and bad registrations."""
    with pytest.raises(InvalidInputError):
        SolverRegistry.get_solver("tsp")
    with pytest.raises(TypeError):
        SolverRegistry.register_solver("tsp", dict)
    assert "is-separator" in SolverRegistry.list_problems()
    assert issubclass(type(SolverRegistry.get_solver("is")), BaseSolver)


def test_unknown_problem_instance_raises():
    """Test instance validation."""
    with pytest.raises(InvalidInputError):
        instance_of(nx.path_graph(3), "coloring")
    with pytest.raises(InvalidInputError):
        instance_of(nx.path_graph(3), "steiner", terminals=(5,))
    with pytest.raises(InvalidInputError):
        instance_of(nx.path_graph(3), "rds", r=0)


def test_separator_recursion_on_disks(disk_row):
    """Test separator-recursion independent set on a row of disks."""
    graph = build_intersection_graph(disk_row)
    inst = ProblemInstance(graph, "is-separator", objects=disk_row)
    assert solve(inst).optimum == 2


def test_separator_recursion_needs_geometry():
    """Test that the recursion refuses graphs without objects."""
    with pytest.raises(UnsupportedError):
        solve(instance_of(nx.path_graph(3), "is-separator"))


def _geometric_instance(problem, seed, n=11, dimension=2, **kwargs):
    objects = random_objects(dimension, n, seed, shape_mix="mixed", size_ratio=2.0)
    graph = build_intersection_graph(objects)
    return ProblemInstance(graph, problem, objects=objects, **kwargs)


def _assert_matches_oracle(inst, label):
    expected = brute_force(inst).optimum
    result = solve(inst)
    assert result.optimum == expected, label
    if result.feasible:
        assert verify_witness(inst, result.witness, expected), label


@pytest.mark.parametrize("dimension", [2, 3])
@pytest.mark.parametrize("problem,kwargs", [
    ("is", {}),
    ("vc", {}),
    ("ds", {}),
    ("rds", {"r": 1}),
    ("rds", {"r": 2}),
    ("mif", {}),
    ("fvs", {}),
    ("is-separator", {}),
])
def test_solvers_agree_with_oracle(problem, kwargs, dimension):
    """Test exact optima against brute force for n from 6 to 16."""
    for n in range(6, 17, 2):
        for seed in range(3):
            inst = _geometric_instance(problem, seed, n=n, dimension=dimension, **kwargs)
            _assert_matches_oracle(inst, f"n={n} seed={seed}")


def _steiner_instance(seed, n, dimension):
    base = _geometric_instance("is", seed, n=n, dimension=dimension)
    largest = max(nx.connected_components(base.graph.to_networkx()), key=len)
    terminals = tuple(sorted(largest))[:3]
    return ProblemInstance(base.graph, "steiner", terminals=terminals, objects=base.objects)


@pytest.mark.parametrize("dimension", [2, 3])
def test_connectivity_solvers_agree_with_oracle(dimension):
    """Test Steiner trees and connected vertex covers against brute force up to n = 12."""
    for n in range(6, 13, 2):
        for seed in range(3):
            label = f"n={n} seed={seed}"
            _assert_matches_oracle(_steiner_instance(seed, n, dimension), label)
            _assert_matches_oracle(_geometric_instance("cvc", seed, n=n, dimension=dimension), label)


@settings(max_examples=25, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=10_000),
    n=st.integers(min_value=6, max_value=14),
    dimension=st.sampled_from([2, 3]),
    problem=st.sampled_from(["is", "vc", "ds", "mif", "fvs"]),
)
def test_random_instances_agree_with_oracle(seed, n, dimension, problem):
    """Test random geometric instances drawn by hypothesis against brute force."""
    _assert_matches_oracle(_geometric_instance(problem, seed, n=n, dimension=dimension), f"seed={seed}")


@pytest.mark.parametrize("problem", ["is", "ds", "mif", "cvc"])
def test_pruning_does_not_change_optimum(problem):
    """Test that the class caps keep the optimum."""
    inst = _geometric_instance(problem, 7, n=12)
    assert solve(inst, prune=True).optimum == solve(inst, prune=False).optimum


def test_separator_method_matches_blowup():
    """Test that both decomposition methods give the same optimum."""
    inst = _geometric_instance("is", 3, n=14)
    assert solve(inst, method="separator").optimum == solve(inst, method="blowup").optimum


def test_shared_decomposition_across_problems():
    """Test reusing one prepared decomposition for several problems."""
    inst = _geometric_instance("is", 1)
    prepared = prepare_decomposition(inst.graph)
    is_result = solve(inst, prepared)
    vc = ProblemInstance(inst.graph, "vc")
    vc_result = solve(vc, prepared)
    assert is_result.optimum + vc_result.optimum == inst.n
    assert is_result.stats["weighted_width"] == prepared.weighted.weighted_width


def test_result_document_round_trip():
    """Test the solve result document."""
    from fatgraph.domain.types import SolveResult

    result = solve(instance_of(nx.path_graph(3), "is"))
    again = SolveResult.from_dict(result.to_dict())
    assert again.optimum == 2
    assert again.witness == frozenset({0, 2})
    with pytest.raises(InvalidInputError):
        SolveResult.from_dict({"optimum": 1})


def test_r_domination_reports_neighborhood_weight():
    """Test the contracted-neighborhood statistic of the r-domination solver."""
    inst = _geometric_instance("rds", 2, r=2)
    stats = solve(inst).stats
    assert stats["neighborhood_weight"] >= stats["weighted_width"] - 1e-9
