"""Brute-force reference solvers and the seeded instance generator."""

import logging
import random
from fractions import Fraction
from itertools import combinations
from typing import List, Optional

from fatgraph.domain.errors import OracleLimitError
from fatgraph.domain.types import CONNECTIVITY, GeneratorConfig, ProblemInstance, SolveResult
from fatgraph.geometry.graph import IntersectionGraph
from fatgraph.geometry.objects import Ball, Box, ObjectSet, Shape
from fatgraph.solvers.verify import is_feasible

logger = logging.getLogger(__name__)

MAX_N = 24
MAX_N_CONNECTIVITY = 14


def brute_force(
    inst: ProblemInstance,
    max_n: int = MAX_N,
    max_n_connectivity: int = MAX_N_CONNECTIVITY,
) -> SolveResult:
    """Exhaustive subset enumeration with the problems' defining predicates.

    Minimization problems scan sizes upward and maximization problems downward;
    within a size, subsets come in lexicographic order, so the witness is the
    lexicographically first optimal set.

    Raises:
        OracleLimitError: If the instance is above the size guard.
    """
    limit = max_n_connectivity if inst.problem in CONNECTIVITY else max_n
    if inst.n > limit:
        raise OracleLimitError(inst.n, limit, inst.problem)
    sizes = range(inst.n + 1) if inst.minimize else range(inst.n, -1, -1)
    checked = 0
    for size in sizes:
        for chosen in combinations(range(inst.n), size):
            checked += 1
            if is_feasible(inst, chosen):
                return SolveResult(inst.problem, size, frozenset(chosen), {"subsets_checked": checked})
    return SolveResult(inst.problem, None, frozenset(), {"subsets_checked": checked})


def _snap(value: float, denominator: int) -> Fraction:
    return Fraction(round(value * denominator), denominator)


def gen_instance(cfg: GeneratorConfig) -> ObjectSet:
    """Random similarly sized fat objects, deterministic in ``cfg.seed``.

    Centers (or lower corners) are uniform in [0, L]^d with L = 3 n^(1/d) by
    default; ball radii and box sides are uniform in [1, sigma]. All numbers
    are snapped to multiples of 2^-denominator_bits.
    """
    rng = random.Random(cfg.seed)
    denominator = 2 ** cfg.denominator_bits
    region = cfg.region_side if cfg.region_side is not None else 3 * max(cfg.n, 1) ** (1 / cfg.dimension)
    shapes: List[Shape] = []
    for _ in range(cfg.n):
        kind = cfg.shape_mix
        if kind == "mixed":
            kind = "ball" if rng.random() < 0.5 else "box"
        position = tuple(_snap(rng.uniform(0, region), denominator) for _ in range(cfg.dimension))
        size = _snap(rng.uniform(1, cfg.size_ratio), denominator) if cfg.size_ratio > 1 else Fraction(1)
        if kind == "ball":
            shapes.append(Ball(position, size))
        else:
            shapes.append(Box(position, (size,) * cfg.dimension))
    logger.debug("Generated %d objects (d=%d, seed=%d)", cfg.n, cfg.dimension, cfg.seed)
    return ObjectSet.from_shapes(shapes, cfg.dimension)


def relabel_instance(inst: ProblemInstance, permutation: List[int]) -> ProblemInstance:
    """Same instance with vertex v renamed permutation[v]."""
    graph = IntersectionGraph.from_edges(
        inst.n, ((permutation[u], permutation[v]) for u, v in inst.graph.edges())
    )
    return ProblemInstance(
        graph=graph,
        problem=inst.problem,
        r=inst.r,
        terminals=tuple(permutation[t] for t in inst.terminals),
        budget=inst.budget,
    )


def random_permutation(n: int, seed: Optional[int] = None) -> List[int]:
    permutation = list(range(n))
    random.Random(seed).shuffle(permutation)
    return permutation
