"""Solver registry for lookup by problem name."""

from typing import Any, Dict, List, Optional, Type

from fatgraph.domain.errors import InvalidInputError
from fatgraph.domain.types import ProblemInstance, SolveResult
from fatgraph.solvers.base import BaseSolver
from fatgraph.solvers.connected_vc import ConnectedVertexCoverSolver
from fatgraph.solvers.dominating_set import DominatingSetSolver
from fatgraph.solvers.independent_set import IndependentSetSolver, VertexCoverSolver
from fatgraph.solvers.induced_forest import FeedbackVertexSetSolver, InducedForestSolver
from fatgraph.solvers.separator_is import SeparatorRecursionSolver
from fatgraph.solvers.steiner import SteinerTreeSolver
from fatgraph.treedecomp.pipeline import PreparedDecomposition


class SolverRegistry:
    """Registry of exact solvers keyed by problem name."""

    _solvers: Dict[str, Type[BaseSolver]] = {
        "is": IndependentSetSolver,
        "vc": VertexCoverSolver,
        "ds": DominatingSetSolver,
        "rds": DominatingSetSolver,
        "steiner": SteinerTreeSolver,
        "mif": InducedForestSolver,
        "fvs": FeedbackVertexSetSolver,
        "cvc": ConnectedVertexCoverSolver,
        "is-separator": SeparatorRecursionSolver,
    }

    @classmethod
    def get_solver(cls, problem: str, settings: Optional[Dict[str, Any]] = None) -> BaseSolver:
        """Get a solver instance by problem name.

        Args:
            problem: Problem name (e.g., 'is', 'rds', 'steiner').
            settings: Keyword arguments for the solver constructor.

        Returns:
            Initialized solver.

        Raises:
            InvalidInputError: If no solver is registered for the problem.
        """
        problem = problem.lower()
        if problem not in cls._solvers:
            available = ", ".join(cls._solvers)
            raise InvalidInputError(f"Unsupported problem: {problem}. Supported problems: {available}")
        return cls._solvers[problem](**(settings or {}))

    @classmethod
    def register_solver(cls, problem: str, solver_class: Type[BaseSolver]) -> None:
        if not issubclass(solver_class, BaseSolver):
            raise TypeError(f"{solver_class} must inherit from BaseSolver")
        cls._solvers[problem.lower()] = solver_class

    @classmethod
    def list_problems(cls) -> List[str]:
        return list(cls._solvers)


def solve(inst: ProblemInstance, prepared: Optional[PreparedDecomposition] = None, **settings) -> SolveResult:
    """Solve an instance with the registered solver for its problem."""
    return SolverRegistry.get_solver(inst.problem, settings).solve(inst, prepared)


def solve_independent_set(inst: ProblemInstance, **settings) -> SolveResult:
    return IndependentSetSolver(**settings).solve(inst)


def solve_separator_recursion_is(inst: ProblemInstance, **settings) -> SolveResult:
    return SeparatorRecursionSolver(**settings).solve(inst)


def solve_dominating_set(inst: ProblemInstance, **settings) -> SolveResult:
    return DominatingSetSolver(**settings).solve(inst)


def solve_steiner_tree(inst: ProblemInstance, **settings) -> SolveResult:
    return SteinerTreeSolver(**settings).solve(inst)


def solve_max_induced_forest(inst: ProblemInstance, **settings) -> SolveResult:
    return InducedForestSolver(**settings).solve(inst)


def solve_connected_vertex_cover(inst: ProblemInstance, **settings) -> SolveResult:
    return ConnectedVertexCoverSolver(**settings).solve(inst)
