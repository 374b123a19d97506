"""Size classes and stabbing-grid clique covers."""

import math
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from fatgraph.domain.errors import InvalidInputError
from fatgraph.geometry.objects import Coords, FatObject, diameter, fatness, inner_ball

GridPoint = Tuple[int, ...]

LARGE_DIAMETER = Fraction(1, 4)


def is_large(obj: FatObject) -> bool:
    """Diameter at least 1/4 in normalized units."""
    return diameter(obj).squared >= LARGE_DIAMETER ** 2


def max_size_class(n: int, dimension: int) -> int:
    """ceil((1 - 1/d) log2 n) - 2."""
    if n <= 1:
        return -2
    return math.ceil((1 - 1 / dimension) * math.log2(n) - 1e-12) - 2


def size_class(obj: FatObject, n: int, dimension: int) -> int:
    """Smallest s >= 0 with diam(obj) < 2^s / n^(1/d).

    Compared exactly as diam^(2d) * n^2 < 4^(d s).
    """
    lhs = diameter(obj).squared ** dimension * n * n
    s = 0
    while lhs >= 4 ** (dimension * s):
        s += 1
    return s


def _index_range(center: Fraction, rem_sq: Fraction, delta: Fraction) -> Optional[Tuple[int, int]]:
    """Integers k with (delta * k - center)^2 <= rem_sq, as an inclusive range."""
    if rem_sq < 0:
        return None

    def ok(k: int) -> bool:
        return (delta * k - center) ** 2 <= rem_sq

    mid = math.floor(center / delta)
    seed = mid if ok(mid) else (mid + 1 if ok(mid + 1) else None)
    if seed is None:
        return None
    root = math.sqrt(float(rem_sq))
    lo = min(seed, math.floor((float(center) - root) / float(delta)))
    while not ok(lo):
        lo += 1
    while ok(lo - 1):
        lo -= 1
    hi = max(seed, math.ceil((float(center) + root) / float(delta)))
    while not ok(hi):
        hi -= 1
    while ok(hi + 1):
        hi += 1
    return lo, hi


def lowest_grid_point(center: Coords, radius: Fraction, delta: Fraction) -> Optional[GridPoint]:
    """Lexicographically smallest k with delta * k inside the closed ball, or None."""

    def search(axis: int, rem_sq: Fraction, prefix: Tuple[int, ...]) -> Optional[GridPoint]:
        if axis == len(center):
            return prefix
        bounds = _index_range(center[axis], rem_sq, delta)
        if bounds is None:
            return None
        for k in range(bounds[0], bounds[1] + 1):
            used = (delta * k - center[axis]) ** 2
            found = search(axis + 1, rem_sq - used, prefix + (k,))
            if found is not None:
                return found
        return None

    return search(0, radius * radius, ())


def dyadic_at_most(bound: float) -> Fraction:
    """Largest power of two not exceeding a positive bound."""
    if bound <= 0:
        raise InvalidInputError(f"Grid spacing bound must be positive, got {bound}")
    exponent = math.floor(math.log2(bound))
    value = Fraction(2) ** exponent
    while value > Fraction(bound):
        value /= 2
    return value


def stab_objects(objects: Sequence[FatObject], spacing: Fraction) -> Dict[GridPoint, List[int]]:
    """Assign every object to the lowest grid point inside its inner ball.

    The spacing is halved until every object is stabbed.
    """
    while True:
        groups: Dict[GridPoint, List[int]] = defaultdict(list)
        missed = False
        for obj in objects:
            center, radius = inner_ball(obj)
            point = lowest_grid_point(center, radius, spacing)
            if point is None:
                missed = True
                break
            groups[point].append(obj.id)
        if not missed:
            return dict(groups)
        spacing /= 2


def clique_cover_size_class(
    objects: Sequence[FatObject],
    s: int,
    n: int,
    alpha: Optional[float] = None,
) -> List[List[int]]:
    """Group objects of size class s by shared stabbing points.

    Args:
        objects: Objects with diam in [2^(s-1), 2^s) / n^(1/d) in normalized units.
        s: Size class index, at least 1.
        n: Number of objects in the whole instance.
        alpha: Fatness lower bound; defaults to the minimum over ``objects``.

    Returns:
        Cliques as lists of object ids, ordered by stabbing point.

    Raises:
        InvalidInputError: If an object lies outside size class s.
    """
    if not objects:
        return []
    dimension = objects[0].dimension
    for obj in objects:
        if size_class(obj, n, dimension) != s:
            raise InvalidInputError(f"Object {obj.id} is not in size class {s}")
    if alpha is None:
        alpha = min(fatness(o) for o in objects)
    bound = alpha * 2.0 ** (s - 2) / (math.sqrt(dimension) * n ** (1.0 / dimension))
    groups = stab_objects(objects, dyadic_at_most(bound))
    return [groups[p] for p in sorted(groups)]


def stab_large_objects(objects: Sequence[FatObject], alpha: Optional[float] = None) -> List[List[int]]:
    """Clique cover of objects with diameter at least 1/4 on a spacing-alpha/(4 sqrt d) grid."""
    if not objects:
        return []
    dimension = objects[0].dimension
    if alpha is None:
        alpha = min(fatness(o) for o in objects)
    groups = stab_objects(objects, dyadic_at_most(alpha / (4 * math.sqrt(dimension))))
    return [groups[p] for p in sorted(groups)]
