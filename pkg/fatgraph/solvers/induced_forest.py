"""Maximum induced forest and minimum feedback vertex set.

A universal vertex u0 is added. A selected set X induces a forest exactly when
some choice of u0-edges turns X + u0 into a tree, i.e. a connected graph with
|X| edges. Keys are (selected bag vertices, |X|, edge count, partition of u0
plus the selected bag vertices); u0 is element 0 of every partition.
"""

from collections import defaultdict
from typing import Dict, FrozenSet, List

from fatgraph.rankbased import glue, insert, is_singleton, join, num_blocks, project
from fatgraph.solvers.base import DPSolver, complement
from fatgraph.solvers.driver import RankBasedAlgebra, Table


class InducedForestAlgebra(RankBasedAlgebra):

    maximize = True

    def __init__(self, inst, partition, prune=True):
        super().__init__(inst, partition, prune)
        self.cap = 2 * partition.kappa_hat

    def empty_key(self):
        return ((), 0, 0, (0,))

    def group_of(self, key):
        return key[:3]

    def partition_of(self, key):
        return key[3]

    def weight_of(self, witness) -> int:
        return 0

    def introduce(self, table: Table, bag: FrozenSet[int], v: int) -> Table:
        out: Table = {}
        nbrs = self.graph.neighbors(v)
        for (selected, count, edges, p), witness in table.items():
            self.offer(out, (selected, count, edges, p), witness)
            grown = tuple(sorted(selected + (v,)))
            index = grown.index(v) + 1
            q = insert(p, index)
            adjacent = [u for u in selected if u in nbrs]
            for u in adjacent:
                q = glue(q, index, grown.index(u) + 1)
            self.offer(out, (grown, count + 1, edges + len(adjacent), q), witness | {v})
        return out

    def forget(self, table: Table, bag: FrozenSet[int], v: int) -> Table:
        out: Table = {}
        for (selected, count, edges, p), witness in table.items():
            if v not in selected:
                self.offer(out, (selected, count, edges, p), witness)
                continue
            index = selected.index(v) + 1
            rest = selected[:index - 1] + selected[index:]
            hooked = glue(p, 0, index)
            self.offer(out, (rest, count, edges + 1, project(hooked, index)), witness)
            if not is_singleton(p, index):
                self.offer(out, (rest, count, edges, project(p, index)), witness)
        return out

    def join(self, left: Table, right: Table, bag: FrozenSet[int]) -> Table:
        by_selection: Dict[tuple, List] = defaultdict(list)
        for key, witness in right.items():
            by_selection[key[0]].append((key, witness))
        out: Table = {}
        for (selected, count, edges, p), witness in left.items():
            shared = self._edges_within(selected)
            for (_, other_count, other_edges, q), other in by_selection.get(selected, ()):
                key = (
                    selected,
                    count + other_count - len(selected),
                    edges + other_edges - shared,
                    join(p, q),
                )
                self.offer(out, key, witness | other)
        return out

    def _edges_within(self, selected) -> int:
        members = set(selected)
        return sum(len(self.graph.neighbors(v) & members) for v in selected) // 2

    def prune(self, table: Table, bag: FrozenSet[int]) -> Table:
        # the partial graph on u0 plus the selection stays a forest
        table = {
            key: witness
            for key, witness in table.items()
            if key[2] == key[1] + 1 - num_blocks(key[3])
        }
        if self.prune_enabled:
            table = {key: witness for key, witness in table.items() if self.within_cap(key[0], self.cap)}
        return self.reduce_table(table)

    def finish(self, root: Table):
        complete = [w for (selected, count, edges, p), w in root.items() if not selected and edges == count]
        if not complete:
            return None
        return max(complete, key=lambda w: (len(w), [-v for v in sorted(w)]))


class InducedForestSolver(DPSolver):
    algebra_class = InducedForestAlgebra


class FeedbackVertexSetSolver(DPSolver):
    """Complement of a maximum induced forest."""
    algebra_class = InducedForestAlgebra

    def transform(self, inst, witness):
        return complement(inst, witness)
