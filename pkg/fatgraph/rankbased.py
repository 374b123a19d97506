"""Set partitions of a small ordered universe and the rank-based reduce.

A partition of a universe of size u is stored as a restricted growth string:
a tuple of block labels where labels first appear in increasing order.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Hashable, Iterator, List, Sequence, Tuple

from fatgraph.domain.errors import InvalidInputError

SetPartition = Tuple[int, ...]

MAX_UNIVERSE = 30


def canonical(labels: Sequence[Hashable]) -> SetPartition:
    relabel: Dict[Hashable, int] = {}
    return tuple(relabel.setdefault(label, len(relabel)) for label in labels)


def top(u: int) -> SetPartition:
    """Single block."""
    return (0,) * u


def bottom(u: int) -> SetPartition:
    """All singletons."""
    return tuple(range(u))


def num_blocks(p: SetPartition) -> int:
    return max(p, default=-1) + 1


def blocks(p: SetPartition) -> List[List[int]]:
    result: List[List[int]] = [[] for _ in range(num_blocks(p))]
    for element, label in enumerate(p):
        result[label].append(element)
    return result


def join(p: SetPartition, q: SetPartition) -> SetPartition:
    """Finest common coarsening of p and q.

    Raises:
        InvalidInputError: If the universes differ in size.
    """
    if len(p) != len(q):
        raise InvalidInputError(f"Cannot join partitions of universes {len(p)} and {len(q)}")
    parent = list(range(len(p)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for partition in (p, q):
        first: Dict[int, int] = {}
        for element, label in enumerate(partition):
            if label in first:
                a, b = find(first[label]), find(element)
                if a != b:
                    parent[max(a, b)] = min(a, b)
            else:
                first[label] = element
    return canonical(find(x) for x in range(len(p)))


def insert(p: SetPartition, index: int) -> SetPartition:
    """Add a new singleton element at position ``index``."""
    labels = list(p)
    labels.insert(index, num_blocks(p))
    return canonical(labels)


def glue(p: SetPartition, i: int, j: int) -> SetPartition:
    """Merge the blocks of elements i and j."""
    a, b = p[i], p[j]
    if a == b:
        return p
    return canonical(a if label == b else label for label in p)


def is_singleton(p: SetPartition, index: int) -> bool:
    label = p[index]
    return sum(1 for x in p if x == label) == 1


def project(p: SetPartition, index: int, strict: bool = True) -> SetPartition:
    """Remove element ``index``.

    Raises:
        InvalidInputError: If strict and the element forms a singleton block,
            which would disconnect it from everything that remains.
    """
    if strict and is_singleton(p, index):
        raise InvalidInputError(f"Element {index} is a singleton block and cannot be projected")
    return canonical(p[:index] + p[index + 1:])


def consistent_cuts(p: SetPartition) -> Iterator[int]:
    """Masks over elements 1..u-1 of two-sided cuts that keep every block on one side.

    Element 0 is always on side 0, so bit (e - 1) marks element e on side 1.
    """
    parts = blocks(p)
    free = [b for b in parts if 0 not in b]
    block_masks = [sum(1 << (e - 1) for e in b) for b in free]
    for sides in product((0, 1), repeat=len(free)):
        yield sum(m for m, s in zip(block_masks, sides) if s)


@dataclass
class WeightedPartitionSet:
    """Partitions of an ordered universe with their minimum weights."""
    universe: Tuple[Hashable, ...]
    entries: Dict[SetPartition, int] = field(default_factory=dict)

    def __post_init__(self):
        self.universe = tuple(self.universe)
        if len(self.universe) > MAX_UNIVERSE:
            raise InvalidInputError(f"Universe of size {len(self.universe)} exceeds {MAX_UNIVERSE}")

    def add(self, partition: SetPartition, weight: int) -> None:
        if len(partition) != len(self.universe):
            raise InvalidInputError(
                f"Partition over {len(partition)} elements added to universe of {len(self.universe)}"
            )
        current = self.entries.get(partition)
        if current is None or weight < current:
            self.entries[partition] = weight

    def __len__(self) -> int:
        return len(self.entries)

    def best_completion(self, q: SetPartition):
        """min weight over entries p with join(p, q) = top, or None."""
        values = [w for p, w in self.entries.items() if num_blocks(join(p, q)) <= 1]
        return min(values, default=None)


def reduce_entries(entries: Dict[SetPartition, int], u: int) -> Dict[SetPartition, int]:
    """Row basis of the cut matrix over GF(2), scanning rows by increasing weight."""
    if u == 0:
        raise InvalidInputError("Cannot reduce over an empty universe")
    columns: Dict[int, int] = {}
    basis: Dict[int, int] = {}
    kept: Dict[SetPartition, int] = {}
    for partition, weight in sorted(entries.items(), key=lambda kv: (kv[1], kv[0])):
        row = 0
        for cut in consistent_cuts(partition):
            row |= 1 << columns.setdefault(cut, len(columns))
        while row:
            pivot = row.bit_length() - 1
            if pivot in basis:
                row ^= basis[pivot]
            else:
                basis[pivot] = row
                kept[partition] = weight
                break
    return kept


def reduce(partitions: WeightedPartitionSet) -> WeightedPartitionSet:
    """Representative subset of at most 2^(u-1) weighted partitions.

    For every partition q of the universe, the minimum weight of an entry whose
    join with q is the single block is the same before and after.

    Raises:
        InvalidInputError: If the universe is empty.
    """
    kept = reduce_entries(partitions.entries, len(partitions.universe))
    return WeightedPartitionSet(partitions.universe, kept)


def all_partitions(u: int) -> Iterator[SetPartition]:
    """Every set partition of u elements as a restricted growth string."""
    if u == 0:
        yield ()
        return

    def extend(prefix: List[int], used: int) -> Iterator[SetPartition]:
        if len(prefix) == u:
            yield tuple(prefix)
            return
        for label in range(used + 1):
            prefix.append(label)
            yield from extend(prefix, max(used, label + 1))
            prefix.pop()

    yield from extend([0], 1)


def check_representation(original: WeightedPartitionSet, reduced: WeightedPartitionSet) -> List[str]:
    """Compare best completions over all partitions q; returns mismatches."""
    problems = []
    for q in all_partitions(len(original.universe)):
        before = original.best_completion(q)
        after = reduced.best_completion(q)
        if before != after:
            problems.append(f"q={q}: expected {before}, got {after}")
    if not set(reduced.entries) <= set(original.entries):
        problems.append("reduced set contains partitions not in the original")
    if len(reduced) > 2 ** (len(original.universe) - 1):
        problems.append(f"reduced set has {len(reduced)} entries, above 2^(u-1)")
    return problems
