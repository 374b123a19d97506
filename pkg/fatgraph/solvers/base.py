"""Base classes shared by all exact solvers."""

import logging
import time
from abc import ABC, abstractmethod
from typing import Any, Dict, FrozenSet, Optional, Tuple, Type

from fatgraph.contraction import KappaPartition
from fatgraph.domain.errors import VerificationError
from fatgraph.domain.types import ProblemInstance, SolveResult
from fatgraph.separator.hypercube import EXACT_H0_LIMIT
from fatgraph.solvers.driver import StateAlgebra, run_dp
from fatgraph.solvers.verify import verify_witness
from fatgraph.treedecomp.pipeline import PreparedDecomposition, prepare_decomposition

logger = logging.getLogger(__name__)


def decomposition_stats(prepared: PreparedDecomposition) -> Dict[str, Any]:
    partition = prepared.partition
    return {
        "method": prepared.weighted.method,
        "weighted_width": prepared.weighted.weighted_width,
        "width": prepared.nice.width,
        "classes": len(partition.classes),
        "kappa_hat": partition.kappa_hat,
        "delta_hat": partition.delta_hat,
    }


class BaseSolver(ABC):
    """Abstract base class for exact solvers."""

    def __init__(
        self,
        gamma="log",
        method: str = "blowup",
        prune: bool = True,
        c: float = 4.0,
        exact_h0: Optional[bool] = None,
        exact_limit: int = EXACT_H0_LIMIT,
    ):
        """Initialize the solver.

        Args:
            gamma: Weight function name or WeightFunction for the contraction.
            method: Weighted decomposition method, ``blowup`` or ``separator``.
            prune: Apply the per-class selection caps.
            c: Base-case constant of the separator decomposition.
            exact_h0: Force or disable the exhaustive base-hypercube search.
            exact_limit: Size up to which the exhaustive search is the default.
        """
        self.gamma = gamma
        self.method = method
        self.prune = prune
        self.c = c
        self.exact_h0 = exact_h0
        self.exact_limit = exact_limit

    def prepare(self, inst: ProblemInstance) -> PreparedDecomposition:
        return prepare_decomposition(
            inst.graph, self.gamma, self.method, inst.objects, self.c, self.exact_h0, self.exact_limit
        )

    @abstractmethod
    def run(self, inst: ProblemInstance,
            prepared: Optional[PreparedDecomposition]) -> Tuple[Optional[FrozenSet[int]], Dict[str, Any]]:
        """Compute an optimal witness (None if infeasible) and run statistics."""
        pass

    def solve(self, inst: ProblemInstance, prepared: Optional[PreparedDecomposition] = None) -> SolveResult:
        """Solve the instance and verify the witness before returning.

        Raises:
            VerificationError: If the computed witness fails its own predicate.
        """
        started = time.perf_counter()
        witness, stats = self.run(inst, prepared)
        stats["seconds"] = round(time.perf_counter() - started, 6)
        stats["pruning"] = self.prune
        if witness is None:
            logger.info("Instance of %s is infeasible", inst.problem)
            return SolveResult(inst.problem, None, frozenset(), stats)
        witness = frozenset(witness)
        if not verify_witness(inst, witness):
            raise VerificationError(f"Computed {inst.problem} witness {sorted(witness)} is not feasible")
        return SolveResult(inst.problem, len(witness), witness, stats)


class DPSolver(BaseSolver):
    """Solver driven by a state algebra over the nice decomposition."""

    algebra_class: Type[StateAlgebra] = None

    def make_algebra(self, inst: ProblemInstance, partition: KappaPartition) -> StateAlgebra:
        return self.algebra_class(inst, partition, self.prune)

    def transform(self, inst: ProblemInstance, witness: Optional[FrozenSet[int]]) -> Optional[FrozenSet[int]]:
        """Map the DP witness to the problem's witness (identity by default)."""
        return witness

    def extra_stats(self, inst: ProblemInstance, prepared: PreparedDecomposition,
                    algebra: StateAlgebra) -> Dict[str, Any]:
        return {}

    def run(self, inst, prepared=None):
        prepared = prepared or self.prepare(inst)
        algebra = self.make_algebra(inst, prepared.partition)
        outcome = run_dp(prepared.nice, algebra)
        stats = decomposition_stats(prepared)
        stats.update(outcome.stats.as_dict())
        stats.update(self.extra_stats(inst, prepared, algebra))
        return self.transform(inst, outcome.witness), stats


def complement(inst: ProblemInstance, witness: Optional[FrozenSet[int]]) -> Optional[FrozenSet[int]]:
    if witness is None:
        return None
    return frozenset(range(inst.n)) - witness
