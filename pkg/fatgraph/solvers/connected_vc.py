"""Minimum connected vertex cover."""

from typing import FrozenSet

import networkx as nx

from fatgraph.solvers.base import DPSolver
from fatgraph.solvers.driver import Table, Witness
from fatgraph.solvers.steiner import ConnectedSelectionAlgebra
from fatgraph.solvers.verify import is_vertex_cover


class ConnectedVertexCoverAlgebra(ConnectedSelectionAlgebra):
    """A vertex may stay out only if every bag neighbor is in.

    The unselected vertices form an independent set, so each cover clique has
    at most one of them.
    """

    def __init__(self, inst, partition, prune=True):
        super().__init__(inst, partition, prune)
        self.cap = partition.kappa_hat

    def complete(self, witness: Witness) -> bool:
        return is_vertex_cover(self.graph, witness)

    def introduce(self, table: Table, bag: FrozenSet[int], v: int) -> Table:
        out: Table = {}
        nbrs = self.graph.neighbors(v) & bag
        for (selected, p), witness in table.items():
            if nbrs.issubset(selected):
                self.offer(out, (selected, p), witness)
            self.offer(out, self.select(selected, p, v), witness | {v})
        return out

    def prune(self, table: Table, bag: FrozenSet[int]) -> Table:
        if self.prune_enabled:
            table = {
                key: witness
                for key, witness in table.items()
                if self.within_cap(bag.difference(key[0]), self.cap)
            }
        return self.reduce_table(table)


class ConnectedVertexCoverSolver(DPSolver):
    algebra_class = ConnectedVertexCoverAlgebra

    def run(self, inst, prepared=None):
        graph = inst.graph
        if graph.edge_count == 0:
            return frozenset(), {"edgeless": True}
        nontrivial = [
            c for c in nx.connected_components(graph.to_networkx()) if len(c) > 1
        ]
        if len(nontrivial) > 1:
            return None, {"edge_components": len(nontrivial)}
        return super().run(inst, prepared)
