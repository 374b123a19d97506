"""Defining predicates of every problem, shared by the solvers and the oracle."""

import logging
from typing import AbstractSet, Iterable, Optional

import networkx as nx

from fatgraph.domain.types import ProblemInstance
from fatgraph.geometry.graph import IntersectionGraph

logger = logging.getLogger(__name__)


def is_independent(graph: IntersectionGraph, vertices: AbstractSet[int]) -> bool:
    return all(not (graph.neighbors(v) & vertices) for v in vertices)


def is_vertex_cover(graph: IntersectionGraph, vertices: AbstractSet[int]) -> bool:
    return all(u in vertices or v in vertices for u, v in graph.edges())


def is_r_dominating(graph: IntersectionGraph, vertices: AbstractSet[int], r: int = 1) -> bool:
    """Every vertex lies within r hops of the set (multi-source BFS)."""
    if graph.n == 0:
        return True
    if not vertices:
        return False
    reached = nx.multi_source_dijkstra_path_length(graph.to_networkx(), set(vertices), cutoff=r)
    return len(reached) == graph.n


def is_connected_set(graph: IntersectionGraph, vertices: AbstractSet[int]) -> bool:
    return bool(vertices) and nx.is_connected(graph.induced(vertices))


def is_induced_forest(graph: IntersectionGraph, vertices: AbstractSet[int]) -> bool:
    if not vertices:
        return True
    return nx.is_forest(graph.induced(vertices))


def is_steiner_set(graph: IntersectionGraph, vertices: AbstractSet[int], terminals: Iterable[int]) -> bool:
    return set(terminals) <= vertices and is_connected_set(graph, vertices)


def is_connected_vertex_cover(graph: IntersectionGraph, vertices: AbstractSet[int]) -> bool:
    if not is_vertex_cover(graph, vertices):
        return False
    if graph.edge_count == 0:
        return len(vertices) <= 1
    return is_connected_set(graph, vertices)


def is_feasible(inst: ProblemInstance, witness: Iterable[int]) -> bool:
    """Check the problem's defining predicate on a witness set."""
    vertices = frozenset(witness)
    if any(not 0 <= v < inst.n for v in vertices):
        return False
    graph = inst.graph
    problem = inst.problem
    if problem in ("is", "is-separator"):
        return is_independent(graph, vertices)
    if problem == "vc":
        return is_vertex_cover(graph, vertices)
    if problem in ("ds", "rds"):
        return is_r_dominating(graph, vertices, inst.r)
    if problem == "steiner":
        return is_steiner_set(graph, vertices, inst.terminals)
    if problem == "mif":
        return is_induced_forest(graph, vertices)
    if problem == "fvs":
        return is_induced_forest(graph, frozenset(range(graph.n)) - vertices)
    if problem == "cvc":
        return is_connected_vertex_cover(graph, vertices)
    return False


def verify_witness(inst: ProblemInstance, witness: Iterable[int], optimum: Optional[int] = None) -> bool:
    """True when the witness is feasible and, if given, has size ``optimum``.

    Never raises.
    """
    try:
        vertices = frozenset(witness)
        if optimum is not None and len(vertices) != optimum:
            return False
        return is_feasible(inst, vertices)
    except Exception as e:
        logger.debug("Witness check failed: %s", e)
        return False
