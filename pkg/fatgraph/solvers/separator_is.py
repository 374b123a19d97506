"""Maximum independent set by recursion on clique separators.

An independent set takes at most one vertex from each separator clique, so the
solver enumerates those choices, removes the separator and the neighbors of the
chosen vertices, and recurses on the connected components that remain.
"""

import logging
from itertools import combinations, product
from typing import Dict, FrozenSet, Optional

import networkx as nx

from fatgraph.domain.errors import UnsupportedError
from fatgraph.geometry.objects import ObjectSet
from fatgraph.solvers.base import BaseSolver
from fatgraph.solvers.verify import is_independent
from fatgraph.separator.builder import build_separator

logger = logging.getLogger(__name__)

BRUTE_FORCE_SIZE = 8


class SeparatorRecursionSolver(BaseSolver):
    """Exact maximum independent set directly on the geometry."""

    def run(self, inst, prepared=None):
        if inst.objects is None:
            raise UnsupportedError("Separator recursion needs object geometry")
        self._graph = inst.graph
        self._objects = inst.objects
        self._memo: Dict[FrozenSet[int], FrozenSet[int]] = {}
        self._stats = {"separators": 0, "brute_force_calls": 0, "branches": 0, "max_separator": 0}
        best = self._solve(frozenset(range(inst.n)))
        return best, dict(self._stats)

    def _brute_force(self, vertices: FrozenSet[int]) -> FrozenSet[int]:
        self._stats["brute_force_calls"] += 1
        ordered = sorted(vertices)
        for size in range(len(ordered), 0, -1):
            for chosen in combinations(ordered, size):
                candidate = frozenset(chosen)
                if is_independent(self._graph, candidate):
                    return candidate
        return frozenset()

    def _solve(self, vertices: FrozenSet[int]) -> FrozenSet[int]:
        if not vertices:
            return frozenset()
        cached = self._memo.get(vertices)
        if cached is not None:
            return cached

        components = [frozenset(c) for c in nx.connected_components(self._graph.induced(vertices))]
        if len(components) > 1:
            result = frozenset().union(*(self._solve(c) for c in sorted(components, key=min)))
        elif len(vertices) <= BRUTE_FORCE_SIZE:
            result = self._brute_force(vertices)
        else:
            result = self._branch(vertices)
        self._memo[vertices] = result
        return result

    def _branch(self, vertices: FrozenSet[int]) -> FrozenSet[int]:
        ordered = sorted(vertices)
        subset = ObjectSet.from_shapes([self._objects[v].shape for v in ordered], self._objects.dimension)
        separator = build_separator(subset, self.gamma, self.exact_h0, self.exact_limit)
        self._stats["separators"] += 1
        cliques = [[ordered[i] for i in clique] for clique in separator.cliques]
        removed = frozenset(v for clique in cliques for v in clique)
        self._stats["max_separator"] = max(self._stats["max_separator"], len(removed))
        if not removed:
            logger.debug("Empty separator on %d vertices; falling back to brute force", len(vertices))
            return self._brute_force(vertices)

        best: Optional[FrozenSet[int]] = None
        for choice in product(*[[None] + clique for clique in cliques]):
            chosen = frozenset(v for v in choice if v is not None)
            if not is_independent(self._graph, chosen):
                continue
            self._stats["branches"] += 1
            blocked = set(removed)
            for v in chosen:
                blocked |= self._graph.neighbors(v)
            candidate = chosen | self._solve(vertices - blocked)
            if best is None or len(candidate) > len(best):
                best = candidate
        return best
