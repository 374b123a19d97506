"""Maximum independent set and minimum vertex cover."""

from typing import FrozenSet

from fatgraph.solvers.base import DPSolver, complement
from fatgraph.solvers.driver import StateAlgebra, Table


class IndependentSetAlgebra(StateAlgebra):
    """Keys are the independent subsets of the bag.

    Independence already admits at most one vertex per cover clique, so no
    separate class cap is needed.
    """

    maximize = True

    def empty_key(self):
        return frozenset()

    def introduce(self, table: Table, bag: FrozenSet[int], v: int) -> Table:
        out: Table = {}
        nbrs = self.graph.neighbors(v)
        for selected, witness in table.items():
            self.offer(out, selected, witness)
            if not nbrs & selected:
                self.offer(out, selected | {v}, witness | {v})
        return out

    def forget(self, table: Table, bag: FrozenSet[int], v: int) -> Table:
        out: Table = {}
        for selected, witness in table.items():
            self.offer(out, selected - {v}, witness)
        return out

    def join(self, left: Table, right: Table, bag: FrozenSet[int]) -> Table:
        out: Table = {}
        for selected, witness in left.items():
            other = right.get(selected)
            if other is not None:
                self.offer(out, selected, witness | other)
        return out

    def finish(self, root: Table):
        return root.get(frozenset())


class IndependentSetSolver(DPSolver):
    algebra_class = IndependentSetAlgebra


class VertexCoverSolver(DPSolver):
    """Complement of a maximum independent set."""
    algebra_class = IndependentSetAlgebra

    def transform(self, inst, witness):
        return complement(inst, witness)
