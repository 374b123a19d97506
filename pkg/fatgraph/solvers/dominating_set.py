"""Minimum (distance-r) dominating set.

Each bag vertex carries a label t in 0..r, its planned distance to the solution
(t = 0 means selected), and a flag telling whether a neighbor with label t - 1
has been seen. Labels of adjacent vertices differ by at most one, and a vertex
may only be forgotten once its flag is set.
"""

from collections import defaultdict
from typing import Dict, FrozenSet, List, Tuple

from fatgraph.contraction import class_neighborhoods
from fatgraph.solvers.base import DPSolver
from fatgraph.solvers.driver import StateAlgebra, Table

Label = Tuple[int, int, bool]


def _key(labels: Dict[int, Tuple[int, bool]]) -> Tuple[Label, ...]:
    return tuple((v, t, ok) for v, (t, ok) in sorted(labels.items()))


class DominatingSetAlgebra(StateAlgebra):

    def __init__(self, inst, partition, prune=True):
        super().__init__(inst, partition, prune)
        self.r = inst.r
        kappa, delta = partition.kappa_hat, partition.delta_hat
        self.cap = kappa * kappa * (delta + 1)
        if self.r > 1:
            self.cap *= kappa

    def empty_key(self):
        return ()

    def introduce(self, table: Table, bag: FrozenSet[int], v: int) -> Table:
        out: Table = {}
        nbrs = self.graph.neighbors(v)
        for key, witness in table.items():
            labels = {u: (t, ok) for u, t, ok in key}
            near = [(u, labels[u][0]) for u in labels if u in nbrs]
            for t in range(self.r + 1):
                if any(abs(t - tu) > 1 for _, tu in near):
                    continue
                updated = dict(labels)
                for u, tu in near:
                    if tu == t + 1:
                        updated[u] = (tu, True)
                updated[v] = (t, t == 0 or any(tu == t - 1 for _, tu in near))
                self.offer(out, _key(updated), witness | {v} if t == 0 else witness)
        return out

    def forget(self, table: Table, bag: FrozenSet[int], v: int) -> Table:
        out: Table = {}
        for key, witness in table.items():
            remaining = []
            justified = True
            for label in key:
                if label[0] == v:
                    justified = label[2]
                else:
                    remaining.append(label)
            if justified:
                self.offer(out, tuple(remaining), witness)
        return out

    def join(self, left: Table, right: Table, bag: FrozenSet[int]) -> Table:
        by_profile: Dict[tuple, List] = defaultdict(list)
        for key, witness in right.items():
            by_profile[tuple((v, t) for v, t, _ in key)].append((key, witness))
        out: Table = {}
        for key, witness in left.items():
            for other, other_witness in by_profile.get(tuple((v, t) for v, t, _ in key), ()):
                merged = tuple((v, t, a or b) for (v, t, a), (_, _, b) in zip(key, other))
                self.offer(out, merged, witness | other_witness)
        return out

    def prune(self, table: Table, bag: FrozenSet[int]) -> Table:
        if not self.prune_enabled:
            return table
        return {
            key: witness
            for key, witness in table.items()
            if self.within_cap([v for v, t, _ in key if t == 0], self.cap)
        }

    def finish(self, root: Table):
        return root.get(())


class DominatingSetSolver(DPSolver):
    algebra_class = DominatingSetAlgebra

    def extra_stats(self, inst, prepared, algebra):
        weights = prepared.partition.contracted.weights
        reach = class_neighborhoods(prepared.partition.contracted, inst.r)
        heaviest = 0.0
        for bag in prepared.weighted.bags.values():
            near = frozenset().union(*(reach[c] for c in bag)) if bag else frozenset()
            heaviest = max(heaviest, sum(weights[c] for c in near))
        return {
            "r": inst.r,
            "selection_cap": algebra.cap,
            "cap_includes_extra_kappa": inst.r > 1,
            "neighborhood_weight": heaviest,
        }
