"""Exact solvers on nice tree decompositions with partition-class pruning."""

from fatgraph.solvers.base import BaseSolver, DPSolver
from fatgraph.solvers.driver import StateAlgebra, run_dp
from fatgraph.solvers.registry import (
    SolverRegistry,
    solve,
    solve_connected_vertex_cover,
    solve_dominating_set,
    solve_independent_set,
    solve_max_induced_forest,
    solve_separator_recursion_is,
    solve_steiner_tree,
)
from fatgraph.solvers.verify import is_feasible, verify_witness

__all__ = [
    "BaseSolver",
    "DPSolver",
    "StateAlgebra",
    "run_dp",
    "SolverRegistry",
    "solve",
    "solve_connected_vertex_cover",
    "solve_dominating_set",
    "solve_independent_set",
    "solve_max_induced_forest",
    "solve_separator_recursion_is",
    "solve_steiner_tree",
    "is_feasible",
    "verify_witness",
]
