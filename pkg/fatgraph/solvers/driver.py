"""Dynamic programming over nice tree decompositions.

Every solver supplies a state algebra; the driver walks the postorder node list
once, keeps only the tables of nodes whose parent has not been processed yet,
and records table-size statistics.
"""

import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, List, Optional

from fatgraph.contraction import KappaPartition
from fatgraph.domain.types import ProblemInstance
from fatgraph.rankbased import MAX_UNIVERSE, WeightedPartitionSet, reduce_entries
from fatgraph.treedecomp.nice import FORGET, INTRODUCE, JOIN, LEAF, TraditionalTreeDecomposition

logger = logging.getLogger(__name__)

Witness = FrozenSet[int]
Table = Dict[Hashable, Witness]


def offer(table: Table, key: Hashable, witness: Witness, maximize: bool) -> None:
    """Keep the better witness for a key; ties keep the first one seen."""
    current = table.get(key)
    if current is None:
        table[key] = witness
    elif maximize and len(witness) > len(current):
        table[key] = witness
    elif not maximize and len(witness) < len(current):
        table[key] = witness


@dataclass
class DPStats:
    nodes: int = 0
    peak_table: int = 0
    total_entries: int = 0
    pruned: int = 0
    seconds: float = 0.0

    def as_dict(self) -> Dict[str, float]:
        return {
            "nice_nodes": self.nodes,
            "peak_table": self.peak_table,
            "total_entries": self.total_entries,
            "pruned_entries": self.pruned,
            "dp_seconds": round(self.seconds, 6),
        }


class StateAlgebra(ABC):
    """Leaf, introduce, forget and join handlers for one problem."""

    maximize = False

    def __init__(self, inst: ProblemInstance, partition: KappaPartition, prune: bool = True):
        self.inst = inst
        self.graph = inst.graph
        self.partition = partition
        self.prune_enabled = prune

    def leaf(self) -> Table:
        return {self.empty_key(): frozenset()}

    @abstractmethod
    def empty_key(self) -> Hashable:
        """Key of the empty partial solution on an empty bag."""
        pass

    @abstractmethod
    def introduce(self, table: Table, bag: FrozenSet[int], v: int) -> Table:
        pass

    @abstractmethod
    def forget(self, table: Table, bag: FrozenSet[int], v: int) -> Table:
        pass

    @abstractmethod
    def join(self, left: Table, right: Table, bag: FrozenSet[int]) -> Table:
        pass

    def prune(self, table: Table, bag: FrozenSet[int]) -> Table:
        """Drop dominated entries; class caps apply only when ``prune_enabled``."""
        return table

    @abstractmethod
    def finish(self, root: Table) -> Optional[Witness]:
        """Best complete solution, or None when infeasible."""
        pass

    def offer(self, table: Table, key: Hashable, witness: Witness) -> None:
        offer(table, key, witness, self.maximize)

    def class_counts(self, vertices) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for v in vertices:
            c = self.partition.class_of[v]
            counts[c] = counts.get(c, 0) + 1
        return counts

    def within_cap(self, vertices, cap: int) -> bool:
        return all(count <= cap for count in self.class_counts(vertices).values())

    def selected_neighbors(self, v: int, selected) -> List[int]:
        return sorted(self.graph.neighbors(v) & selected)


class RankBasedAlgebra(StateAlgebra):
    """Algebras whose keys end with a partition and that compress tables with reduce.

    ``group_of(key)`` names the entries that may be compared; ``partition_of(key)``
    returns the partition over the group's universe.
    """

    def __init__(self, inst: ProblemInstance, partition: KappaPartition, prune: bool = True):
        super().__init__(inst, partition, prune)
        self.done: List[Witness] = []

    @abstractmethod
    def group_of(self, key: Hashable) -> Hashable:
        pass

    @abstractmethod
    def partition_of(self, key: Hashable) -> tuple:
        pass

    def weight_of(self, witness: Witness) -> int:
        return len(witness)

    def reduce_table(self, table: Table) -> Table:
        groups: Dict[Hashable, Dict[tuple, Hashable]] = {}
        for key in table:
            groups.setdefault(self.group_of(key), {})[self.partition_of(key)] = key
        reduced: Table = {}
        for members in groups.values():
            universe = len(next(iter(members)))
            if len(members) == 1 or universe <= 1 or universe > MAX_UNIVERSE:
                for key in members.values():
                    reduced[key] = table[key]
                continue
            weighted = WeightedPartitionSet(tuple(range(universe)))
            for p, key in members.items():
                weighted.add(p, self.weight_of(table[key]))
            for p in reduce_entries(weighted.entries, universe):
                key = members[p]
                reduced[key] = table[key]
        return reduced


def run_dp(decomposition: TraditionalTreeDecomposition, algebra: StateAlgebra) -> "DPOutcome":
    """Evaluate the algebra bottom-up over a postorder nice decomposition."""
    started = time.perf_counter()
    stats = DPStats(nodes=len(decomposition.nodes))
    tables: Dict[int, Table] = {}
    for index, node in enumerate(decomposition.nodes):
        if node.kind == LEAF:
            table = algebra.leaf()
        elif node.kind == INTRODUCE:
            table = algebra.introduce(tables.pop(node.children[0]), node.bag, node.vertex)
        elif node.kind == FORGET:
            table = algebra.forget(tables.pop(node.children[0]), node.bag, node.vertex)
        elif node.kind == JOIN:
            left, right = (tables.pop(c) for c in node.children)
            table = algebra.join(left, right, node.bag)
        else:
            raise ValueError(f"Unknown nice node kind: {node.kind}")
        before = len(table)
        table = algebra.prune(table, node.bag)
        stats.pruned += before - len(table)
        tables[index] = table
        stats.peak_table = max(stats.peak_table, len(table))
        stats.total_entries += len(table)

    best = algebra.finish(tables.get(decomposition.root, {}))
    stats.seconds = time.perf_counter() - started
    logger.debug("DP over %d nodes: peak table %d, %d entries pruned",
                 stats.nodes, stats.peak_table, stats.pruned)
    return DPOutcome(best, stats)


@dataclass
class DPOutcome:
    witness: Optional[Witness]
    stats: DPStats = field(default_factory=DPStats)
