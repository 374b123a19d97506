"""Balanced clique-weighted separators built from concentric shells."""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from fatgraph.domain.errors import InvalidInputError, UnsupportedError
from fatgraph.geometry.objects import (
    FatObject,
    ObjectSet,
    meets_cube,
    strictly_inside_cube,
)
from fatgraph.separator.cliques import (
    clique_cover_size_class,
    is_large,
    max_size_class,
    size_class,
    stab_large_objects,
)
from fatgraph.separator.hypercube import (
    EXACT_H0_LIMIT,
    Hypercube,
    balance_threshold,
    find_base_hypercube,
    min_hypercube_for_bounds,
    shell_count,
)
from fatgraph.separator.weights import WeightFunction, get_weight_function
from fatgraph.utils.file_utils import format_rational

logger = logging.getLogger(__name__)


@dataclass
class CliqueSeparator:
    """A separator given as a clique partition plus the two sides it splits."""
    cliques: List[List[int]]
    side_a: FrozenSet[int]
    side_b: FrozenSet[int]
    weight: float
    balance: Fraction
    balanced: bool
    shell_index: int = 0
    shell_side: Fraction = Fraction(0)
    candidate_weights: List[float] = field(default_factory=list)
    hypercube: Optional[Hypercube] = None

    def vertices(self) -> FrozenSet[int]:
        return frozenset(v for clique in self.cliques for v in clique)

    def to_dict(self) -> Dict:
        return {
            "cliques": [sorted(c) for c in self.cliques],
            "side_a": sorted(self.side_a),
            "side_b": sorted(self.side_b),
            "weight": self.weight,
            "balance": format_rational(self.balance),
            "balanced": self.balanced,
            "shell_index": self.shell_index,
            "shell_side": format_rational(self.shell_side),
            "candidate_weights": self.candidate_weights,
        }


def balance_ok(largest_side: int, n: int, dimension: int) -> bool:
    """max(|A|, |B|) <= 6^d / (6^d + 1) * n, checked in integers."""
    return (6 ** dimension + 1) * largest_side <= 6 ** dimension * n


def _first_true(predicate: Callable[[int], bool], m: int) -> int:
    """Smallest i in 1..m with predicate(i), or m + 1; predicate is monotone."""
    lo, hi = 1, m + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if predicate(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


class _Shells:
    """Normalized shells H_i = [-a_i, a_i]^d with 2 a_i = 1 + 2i/m."""

    def __init__(self, m: int, dimension: int):
        self.m = m
        self.dimension = dimension
        self.sides = [Fraction(1) + Fraction(2 * i, m) for i in range(m + 1)]

    def lower(self, i: int) -> Tuple[Fraction, ...]:
        return tuple(-self.sides[i] / 2 for _ in range(self.dimension))

    def meets(self, obj: FatObject, i: int) -> bool:
        return meets_cube(obj, self.lower(i), self.sides[i])

    def inside(self, obj: FatObject, i: int) -> bool:
        return strictly_inside_cube(obj, self.lower(i), self.sides[i])

    def first_meeting(self, obj: FatObject) -> int:
        return _first_true(lambda i: self.meets(obj, i), self.m)

    def first_inside(self, obj: FatObject) -> int:
        return _first_true(lambda i: self.inside(obj, i), self.m)


def _normalize(objects: Iterable[FatObject], h0: Hypercube) -> List[FatObject]:
    return [FatObject(o.id, o.shape.translated_scaled(h0.center, h0.side)) for o in objects]


@dataclass
class _Candidate:
    index: int
    separator: List[Hashable]
    side_a: List[Hashable]
    side_b: List[Hashable]
    weight: float
    largest: int
    balanced: bool


def _choose(candidates: List[_Candidate]) -> _Candidate:
    best = min(candidates, key=lambda c: (c.weight, c.index))
    if best.balanced:
        return best
    balanced = [c for c in candidates if c.balanced]
    if balanced:
        fallback = min(balanced, key=lambda c: (c.weight, c.index))
        logger.warning(
            "Minimum-weight shell %d is unbalanced; using balanced shell %d (weight %.3f vs %.3f)",
            best.index, fallback.index, fallback.weight, best.weight,
        )
        return fallback
    logger.warning("No candidate shell is balanced; returning minimum-weight shell %d", best.index)
    return best


def build_separator(
    objects: ObjectSet,
    gamma="log",
    exact_h0: Optional[bool] = None,
    exact_limit: int = EXACT_H0_LIMIT,
) -> CliqueSeparator:
    """Build a balanced clique-weighted separator of the intersection graph.

    Args:
        objects: Object set with at least one object; vertex v is object v.
        gamma: Weight function or registered name.
        exact_h0: Force or disable the exhaustive base-hypercube search.
        exact_limit: Default size limit for the exhaustive search.

    Returns:
        The minimum-weight candidate separator (ties to the smallest shell).
    """
    gamma = get_weight_function(gamma)
    n = len(objects)
    dimension = objects.dimension
    h0 = find_base_hypercube(objects, exact=exact_h0, exact_limit=exact_limit)
    normalized = _normalize(objects, h0)
    shells = _Shells(shell_count(n, dimension), dimension)
    m = shells.m
    alpha = objects.fatness

    first_meet = {o.id: shells.first_meeting(o) for o in normalized}
    large_m = [o for o in normalized if is_large(o) and first_meet[o.id] <= m]
    large_ids = {o.id for o in large_m}
    small = [o for o in normalized if o.id not in large_ids and first_meet[o.id] <= m]
    first_in = {o.id: shells.first_inside(o) for o in small}

    group_of: Dict[int, Hashable] = {}
    by_class: Dict[int, List[FatObject]] = defaultdict(list)
    for obj in small:
        by_class[size_class(obj, n, dimension)].append(obj)
    # every object below the large threshold lands in classes 0..s_max
    s_max = max(0, max_size_class(n, dimension))
    overflow = sorted(s for s in by_class if s > s_max)
    if overflow:
        raise InvalidInputError(f"Size classes {overflow} exceed s_max = {s_max} for n = {n}")
    for s in range(s_max + 1):
        members = by_class.get(s, [])
        if not members:
            continue
        if s == 0:
            for obj in members:
                group_of[obj.id] = ("point", obj.id)
        else:
            for index, clique in enumerate(clique_cover_size_class(members, s, n, alpha)):
                for v in clique:
                    group_of[v] = ("class", s, index)
    for index, clique in enumerate(stab_large_objects(large_m, alpha)):
        for v in clique:
            group_of[v] = ("large", index)

    candidates = []
    for i in range(1, m + 1):
        boundary = [o.id for o in small if first_meet[o.id] <= i < first_in[o.id]]
        separator = sorted(boundary + sorted(large_ids))
        sep_set = set(separator)
        side_a = [o.id for o in small if first_in[o.id] <= i]
        side_b = [v for v in range(n) if v not in sep_set and first_in.get(v, m + 1) > i]
        sizes: Dict[Hashable, int] = defaultdict(int)
        for v in separator:
            sizes[group_of[v]] += 1
        weight = gamma.total(sizes.values())
        largest = max(len(side_a), len(side_b))
        candidates.append(_Candidate(
            i, separator, side_a, side_b, weight, largest,
            balance_ok(largest, n, dimension),
        ))

    chosen = _choose(candidates)
    grouped: Dict[Hashable, List[int]] = defaultdict(list)
    for v in chosen.separator:
        grouped[group_of[v]].append(v)
    cliques = sorted((sorted(c) for c in grouped.values()), key=lambda c: c[0])

    side = h0.side * shells.sides[chosen.index]
    logger.debug(
        "Separator: shell %d/%d, %d cliques, weight %.3f, sides %d/%d",
        chosen.index, m, len(cliques), chosen.weight, len(chosen.side_a), len(chosen.side_b),
    )
    return CliqueSeparator(
        cliques=cliques,
        side_a=frozenset(chosen.side_a),
        side_b=frozenset(chosen.side_b),
        weight=chosen.weight,
        balance=Fraction(chosen.largest, n) if n else Fraction(0),
        balanced=chosen.balanced,
        shell_index=chosen.index,
        shell_side=shells.sides[chosen.index],
        candidate_weights=[c.weight for c in candidates],
        hypercube=Hypercube(h0.center, side),
    )


def separator_for_contraction(
    partition,
    objects: Optional[ObjectSet],
    gamma="log",
    nodes: Optional[Sequence[int]] = None,
    exact_h0: Optional[bool] = None,
    exact_limit: int = EXACT_H0_LIMIT,
) -> CliqueSeparator:
    """Separator over contracted nodes, treating each class as the union of its objects.

    Args:
        partition: KappaPartition built over the intersection graph of ``objects``.
        objects: Geometry of the original vertices.
        gamma: Weight function or registered name.
        nodes: Restrict to these class indices (defaults to all classes).
        exact_h0: Force or disable the exhaustive base-hypercube search.
        exact_limit: Default size limit for the exhaustive search.

    Returns:
        Separator whose cliques are singleton class lists; balance counts original vertices.

    Raises:
        UnsupportedError: If no geometry matches the partition.
    """
    if objects is None:
        raise UnsupportedError("Contraction separators need the object geometry; use the blowup path")
    vertex_count = sum(len(c) for c in partition.classes)
    if len(objects) != vertex_count:
        raise UnsupportedError(
            f"Geometry has {len(objects)} objects but the partition covers {vertex_count} vertices"
        )
    gamma = get_weight_function(gamma)
    dimension = objects.dimension
    nodes = sorted(range(len(partition.classes)) if nodes is None else nodes)
    sizes = {c: len(partition.classes[c]) for c in nodes}
    total = sum(sizes.values())

    bounds = []
    for c in nodes:
        boxes = [objects[v].bounds() for v in partition.classes[c]]
        lo = tuple(min(b[0][a] for b in boxes) for a in range(dimension))
        hi = tuple(max(b[1][a] for b in boxes) for a in range(dimension))
        bounds.append((lo, hi))
    exact = exact_h0 if exact_h0 is not None else len(nodes) <= exact_limit
    h0 = min_hypercube_for_bounds(
        bounds, [sizes[c] for c in nodes], balance_threshold(total, dimension), exact
    )
    shells = _Shells(shell_count(total, dimension), dimension)
    m = shells.m

    first_meet, first_in, large = {}, {}, set()
    for c in nodes:
        members = _normalize((objects[v] for v in partition.classes[c]), h0)
        first_meet[c] = min(shells.first_meeting(o) for o in members)
        first_in[c] = max(shells.first_inside(o) for o in members)
        if first_meet[c] <= m and any(is_large(o) for o in members):
            large.add(c)

    candidates = []
    for i in range(1, m + 1):
        separator = [c for c in nodes if c in large or first_meet[c] <= i < first_in[c]]
        sep_set = set(separator)
        side_a = [c for c in nodes if c not in sep_set and first_in[c] <= i]
        side_b = [c for c in nodes if c not in sep_set and first_in[c] > i]
        weight = gamma.total(sizes[c] for c in separator)
        largest = max(sum(sizes[c] for c in side_a), sum(sizes[c] for c in side_b))
        candidates.append(_Candidate(
            i, separator, side_a, side_b, weight, largest,
            balance_ok(largest, total, dimension),
        ))

    chosen = _choose(candidates)
    return CliqueSeparator(
        cliques=[[c] for c in chosen.separator],
        side_a=frozenset(chosen.side_a),
        side_b=frozenset(chosen.side_b),
        weight=chosen.weight,
        balance=Fraction(chosen.largest, total) if total else Fraction(0),
        balanced=chosen.balanced,
        shell_index=chosen.index,
        shell_side=shells.sides[chosen.index],
        candidate_weights=[c.weight for c in candidates],
        hypercube=Hypercube(h0.center, h0.side * shells.sides[chosen.index]),
    )
