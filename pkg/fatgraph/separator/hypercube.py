"""Base hypercube search and concentric candidate shells."""

import bisect
import itertools
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from fatgraph.domain.errors import InvalidInputError
from fatgraph.geometry.objects import Coords, ObjectSet, to_coords, to_fraction

logger = logging.getLogger(__name__)

IntBox = Tuple[Tuple[int, ...], Tuple[int, ...], int]

# object count up to which the exhaustive base-hypercube search is the default
EXACT_H0_LIMIT = 2000
# lattice corners per side length in the heuristic sweep
SWEEP_REFINE = 4


@dataclass(frozen=True)
class Hypercube:
    """Axis-aligned closed hypercube."""
    center: Coords
    side: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", to_coords(self.center))
        object.__setattr__(self, "side", to_fraction(self.side))
        if self.side <= 0:
            raise InvalidInputError(f"Hypercube side must be positive, got {self.side}")

    @property
    def dimension(self) -> int:
        return len(self.center)

    @property
    def lower(self) -> Coords:
        return tuple(c - self.side / 2 for c in self.center)

    @property
    def upper(self) -> Coords:
        return tuple(c + self.side / 2 for c in self.center)

    def contains_box(self, lo: Sequence[Fraction], hi: Sequence[Fraction]) -> bool:
        """True when the closed box [lo, hi] lies in the closed hypercube."""
        return all(l >= a and h <= b for l, h, a, b in zip(lo, hi, self.lower, self.upper))


def balance_threshold(n: int, dimension: int) -> int:
    """Number of objects the base hypercube must contain: ceil(n / (6^d + 1))."""
    return -(-n // (6 ** dimension + 1))


def shell_count(n: int, dimension: int) -> int:
    """m = ceil(n^(1/d)), computed exactly."""
    if n <= 1:
        return 1
    m = max(1, int(round(n ** (1.0 / dimension))))
    while m ** dimension < n:
        m += 1
    while m > 1 and (m - 1) ** dimension >= n:
        m -= 1
    return m


def build_candidate_shells(h0: Hypercube, n: int, dimension: Optional[int] = None) -> List[Hypercube]:
    """Concentric shells H_1..H_m around H0 with sides side(H0) * (1 + 2i/m).

    Args:
        h0: Base hypercube.
        n: Number of objects.
        dimension: Ambient dimension, defaults to the hypercube's.

    Returns:
        The m candidate hypercubes in increasing size; the last has side 3 * side(H0).
    """
    dimension = dimension or h0.dimension
    m = shell_count(n, dimension)
    return [
        Hypercube(h0.center, h0.side * (1 + Fraction(2 * i, m)))
        for i in range(1, m + 1)
    ]


def _scale_boxes(bounds: Sequence[Tuple[Coords, Coords]]) -> Tuple[List[Tuple[Tuple[int, ...], Tuple[int, ...]]], int]:
    """Multiply all coordinates by the lcm of their denominators."""
    scale = 1
    for lo, hi in bounds:
        for value in list(lo) + list(hi):
            scale = math.lcm(scale, value.denominator)
    scaled = [
        (tuple(int(v * scale) for v in lo), tuple(int(v * scale) for v in hi))
        for lo, hi in bounds
    ]
    return scaled, scale


def _weighted_kth(needs: List[Tuple[int, int]], threshold: int) -> Optional[int]:
    """Smallest value such that items with need <= value weigh at least threshold."""
    needs.sort()
    total = 0
    for need, weight in needs:
        total += weight
        if total >= threshold:
            return need
    return None


def _grid_upper_bound(items: List[IntBox], threshold: int) -> Tuple[int, Tuple[int, ...]]:
    """Coarse feasible hypercube from bucketing lower corners on a doubling grid."""
    dimension = len(items[0][0])
    extent = max(max(h - l for l, h in zip(lo, hi)) for lo, hi, _ in items)
    extent = max(extent, 1)
    origin = tuple(min(lo[a] for lo, _, _ in items) for a in range(dimension))
    cell = extent
    while True:
        counts = {}
        for lo, _, weight in items:
            key = tuple((lo[a] - origin[a]) // cell for a in range(dimension))
            counts[key] = counts.get(key, 0) + weight
        key, count = max(counts.items(), key=lambda kv: (kv[1], tuple(-k for k in kv[0])))
        if count >= threshold:
            corner = tuple(origin[a] + key[a] * cell for a in range(dimension))
            return 2 * cell, corner
        cell *= 2


def _sweep_corner(items: List[IntBox], threshold: int, side: int, refine: int) -> Optional[Tuple[int, ...]]:
    """Grid corner whose side-``side`` hypercube holds weight >= threshold, or None.

    Corners lie on the lattice of spacing side // refine. An item fits under
    corner c exactly when hi - side <= c <= lo on every axis, so each item
    votes for at most (refine + 1)^d lattice corners.
    """
    step = max(1, side // refine)
    votes: Dict[Tuple[int, ...], int] = defaultdict(int)
    for lo, hi, weight in items:
        ranges = []
        for low, high in zip(lo, hi):
            first, last = -((side - high) // step), low // step
            if first > last:
                break
            ranges.append(range(first, last + 1))
        else:
            for key in itertools.product(*ranges):
                votes[key] += weight
    feasible = [key for key, count in votes.items() if count >= threshold]
    if not feasible:
        return None
    return tuple(k * step for k in min(feasible))


def _min_hypercube(items: List[IntBox], threshold: int, exact: bool) -> Tuple[int, Tuple[int, ...]]:
    """Smallest hypercube containing items of total weight >= threshold.

    Some optimal hypercube has every lower face on an item's lower coordinate,
    so exact mode enumerates corners axis by axis, pruning with the best side
    found so far. Heuristic mode binary-searches the side L, sliding a side-L
    hypercube over a lattice of spacing L/4 and tightening each hit to the
    smallest side for its corner.

    Returns:
        (side, lower corner) in the integer coordinates of ``items``.
    """
    dimension = len(items[0][0])
    best_side, best_corner = _grid_upper_bound(items, threshold)
    items = sorted(items, key=lambda it: it[0][0])
    first_lows = [it[0][0] for it in items]

    def evaluate(corner: Tuple[int, ...], pool: List[IntBox]) -> None:
        nonlocal best_side, best_corner
        needs = []
        for lo, hi, weight in pool:
            if all(lo[a] >= corner[a] for a in range(dimension)):
                needs.append((max(hi[a] - corner[a] for a in range(dimension)), weight))
        side = _weighted_kth(needs, threshold)
        if side is not None and (side, corner) < (best_side, best_corner):
            best_side, best_corner = side, corner

    def window(value: int) -> List[IntBox]:
        start = bisect.bisect_left(first_lows, value)
        end = bisect.bisect_right(first_lows, value + best_side)
        return [it for it in items[start:end] if it[1][0] - value <= best_side]

    if exact:
        def recurse(axis: int, pool: List[IntBox], corner: Tuple[int, ...]) -> None:
            if axis == dimension:
                evaluate(corner, pool)
                return
            for value in sorted({it[0][axis] for it in pool}):
                if axis == 0:
                    sub = window(value)
                else:
                    sub = [
                        it for it in pool
                        if it[0][axis] >= value and it[1][axis] - value <= best_side
                    ]
                if sum(it[2] for it in sub) >= threshold:
                    recurse(axis + 1, sub, corner + (value,))

        recurse(0, items, ())
    else:
        refine = SWEEP_REFINE if dimension <= 3 else 2
        low = _weighted_kth([(max(h - l for l, h in zip(lo, hi)), w) for lo, hi, w in items], threshold)
        high = best_side
        steps = 0
        while low < high:
            mid = (low + high) // 2
            corner = _sweep_corner(items, threshold, mid, refine)
            steps += 1
            if corner is None:
                low = mid + 1
            else:
                evaluate(corner, items)
                high = mid
        logger.debug("Side search finished after %d sweeps at side %d", steps, best_side)

    return best_side, best_corner


def min_hypercube_for_bounds(
    bounds: Sequence[Tuple[Coords, Coords]],
    weights: Sequence[int],
    threshold: int,
    exact: bool,
) -> Hypercube:
    """Exact-coordinate wrapper around the integer hypercube search."""
    scaled, scale = _scale_boxes(bounds)
    items = [(lo, hi, w) for (lo, hi), w in zip(scaled, weights)]
    side, corner = _min_hypercube(items, threshold, exact)
    side_q = Fraction(side, scale)
    center = tuple(Fraction(c, scale) + side_q / 2 for c in corner)
    return Hypercube(center, side_q)


def find_base_hypercube(
    objects: ObjectSet,
    exact: Optional[bool] = None,
    exact_limit: int = EXACT_H0_LIMIT,
) -> Hypercube:
    """Minimum hypercube fully containing at least ceil(n / (6^d + 1)) objects.

    Args:
        objects: Nonempty object set.
        exact: Force the exhaustive corner enumeration (True) or the lattice
            sweep with a binary search on the side (False). None picks exact
            when n <= exact_limit.
        exact_limit: Size up to which the exhaustive search is the default.

    Returns:
        The base hypercube H0.

    Raises:
        InvalidInputError: If the object set is empty.
    """
    n = len(objects)
    if n == 0:
        raise InvalidInputError("Cannot search a base hypercube for an empty object set")
    if exact is None:
        exact = n <= exact_limit
    threshold = balance_threshold(n, objects.dimension)
    h0 = min_hypercube_for_bounds([o.bounds() for o in objects], [1] * n, threshold, exact)
    logger.debug("Base hypercube side %s (threshold %d, exact=%s)", h0.side, threshold, exact)
    return h0
