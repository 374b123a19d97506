"""Unweighted Steiner tree, as the smallest connected vertex set containing the terminals.

Keys are (selected bag vertices, partition of them into connected pieces).
A piece whose last bag vertex is forgotten is either the finished solution or
a dead end.
"""

from collections import defaultdict
from typing import Dict, FrozenSet, List, Optional, Tuple

from fatgraph.domain.errors import InvalidInputError
from fatgraph.rankbased import glue, insert, is_singleton, join, project
from fatgraph.solvers.base import DPSolver
from fatgraph.solvers.driver import RankBasedAlgebra, Table, Witness


class ConnectedSelectionAlgebra(RankBasedAlgebra):
    """Shared transitions for solutions that must induce a connected subgraph."""

    def empty_key(self):
        return ((), ())

    def group_of(self, key):
        return key[0]

    def partition_of(self, key):
        return key[1]

    def select(self, selected: Tuple[int, ...], p: tuple, v: int) -> Tuple[Tuple[int, ...], tuple]:
        grown = tuple(sorted(selected + (v,)))
        index = grown.index(v)
        p = insert(p, index)
        for u in self.graph.neighbors(v):
            if u in selected:
                p = glue(p, index, grown.index(u))
        return grown, p

    def complete(self, witness: Witness) -> bool:
        """Whether a finished connected piece solves the whole instance."""
        return True

    def forget(self, table: Table, bag: FrozenSet[int], v: int) -> Table:
        out: Table = {}
        for (selected, p), witness in table.items():
            if v not in selected:
                self.offer(out, (selected, p), witness)
                continue
            index = selected.index(v)
            rest = selected[:index] + selected[index + 1:]
            if is_singleton(p, index):
                if not rest and self.complete(witness):
                    self.done.append(witness)
                continue
            self.offer(out, (rest, project(p, index)), witness)
        return out

    def join(self, left: Table, right: Table, bag: FrozenSet[int]) -> Table:
        by_selection: Dict[tuple, List] = defaultdict(list)
        for (selected, p), witness in right.items():
            by_selection[selected].append((p, witness))
        out: Table = {}
        for (selected, p), witness in left.items():
            for q, other in by_selection.get(selected, ()):
                self.offer(out, (selected, join(p, q)), witness | other)
        return out

    def finish(self, root: Table) -> Optional[Witness]:
        if not self.done:
            return None
        return min(self.done, key=lambda w: (len(w), sorted(w)))


class SteinerAlgebra(ConnectedSelectionAlgebra):

    def __init__(self, inst, partition, prune=True):
        super().__init__(inst, partition, prune)
        self.terminals = frozenset(inst.terminals)
        kappa, delta = partition.kappa_hat, partition.delta_hat
        self.cap = kappa * kappa * (delta + 1)

    def complete(self, witness: Witness) -> bool:
        return self.terminals <= witness

    def introduce(self, table: Table, bag: FrozenSet[int], v: int) -> Table:
        out: Table = {}
        for (selected, p), witness in table.items():
            if v not in self.terminals:
                self.offer(out, (selected, p), witness)
            self.offer(out, self.select(selected, p, v), witness | {v})
        return out

    def prune(self, table: Table, bag: FrozenSet[int]) -> Table:
        if self.prune_enabled:
            table = {
                key: witness
                for key, witness in table.items()
                if self.within_cap([v for v in key[0] if v not in self.terminals], self.cap)
            }
        return self.reduce_table(table)


class SteinerTreeSolver(DPSolver):
    algebra_class = SteinerAlgebra

    def run(self, inst, prepared=None):
        if not inst.terminals:
            raise InvalidInputError("Steiner tree needs at least one terminal")
        return super().run(inst, prepared)

    def extra_stats(self, inst, prepared, algebra):
        stats = {"terminals": list(inst.terminals), "selection_cap": algebra.cap}
        if inst.budget is not None:
            best = algebra.finish({})
            stats["budget"] = inst.budget
            stats["within_budget"] = best is not None and len(best) <= inst.budget
        return stats
