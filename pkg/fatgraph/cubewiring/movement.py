"""Building blocks of a wiring: local movement, translation, compression and expansion.

The underscored helpers extend existing paths in place; every wire starts the
block at the common current height and ends it at a common new height, and the
first and last layer of a block hold only the wire endpoints.
"""

from typing import List, Sequence

from fatgraph.cubewiring.paths import (
    Path,
    Point,
    Wiring,
    check_points,
    comp,
    comp_point,
    fragment,
    height_of,
    residues,
    rise,
    walk,
)
from fatgraph.domain.errors import InvalidInputError


def _local(paths: List[Path], targets: Sequence[Point], k: int) -> int:
    h0 = height_of(paths)
    cells = set()
    for path, target in zip(paths, targets):
        here = path[-1][:-1]
        cell = comp_point(here, k)
        if cell != comp_point(target, k):
            raise InvalidInputError(f"{here} and {target} lie in different {k}-cells")
        if cell in cells:
            raise InvalidInputError(f"More than one point in {k}-cell {cell}")
        cells.add(cell)
    for path, target in zip(paths, targets):
        rise(path, h0 + 1)
        for axis, x in enumerate(target):
            walk(path, axis, x)
        rise(path, h0 + 2)
    return h0 + 2


def _shift(paths: List[Path], axis: int, shift: int, lo: int, hi: int) -> int:
    """Move wires with coordinate lo..hi on ``axis`` by ``shift``; the rest rise.

    The wire at coordinate x climbs hi - x + 1 layers before moving, so wires
    that move later never cross the ones already moved.
    """
    if shift < 0:
        raise InvalidInputError(f"Shift must be non-negative, got {shift}")
    h0 = height_of(paths)
    span = hi - lo + 1
    for path in paths:
        x = path[-1][axis]
        if lo <= x <= hi:
            rise(path, h0 + span + 1 - (x - lo + 1))
            walk(path, axis, x + shift)
        elif x > hi:
            raise InvalidInputError(f"Coordinate {x} lies above the moved range {lo}..{hi}")
        rise(path, h0 + span + 1)
    return h0 + span + 1


def _compress(paths: List[Path], k: int, base: int) -> int:
    """Move every wire from a k-spaced point x to comp_k(x) + base, one axis at a time."""
    if base not in (0, 1):
        raise InvalidInputError(f"Compression base must be 0 or 1, got {base}")
    starts = [path[-1][:-1] for path in paths]
    if len(residues(starts, k)) > 1:
        raise InvalidInputError(f"Points are not {k}-spaced: several residues modulo {k}")
    top = height_of(paths)
    dimension = len(starts[0]) if starts else 0
    for axis in reversed(range(dimension)):
        h0 = top
        cells = [comp(path[-1][axis], k) for path in paths]
        top = h0 + max(cells) + 2
        for path, c in zip(paths, cells):
            rise(path, h0 + c + 1)
            walk(path, axis, c + base)
            rise(path, top)
    return top


def _expand(paths: List[Path], targets: Sequence[Point], k: int, base: int) -> int:
    """Reverse of _compress: move wires from comp_k(target) + base up to the k-spaced targets."""
    h0 = height_of(paths)
    mirror = [[tuple(t) + (h0,)] for t in targets]
    top = _compress(mirror, k, base)
    for path, reverse in zip(paths, mirror):
        if reverse[-1][:-1] != path[-1][:-1]:
            raise InvalidInputError(f"Wire at {path[-1][:-1]} cannot expand to {reverse[0][:-1]}")
        path.extend(p[:-1] + (h0 + top - p[-1],) for p in reversed(reverse[:-1]))
    return top


def _start(points: Sequence[Point], height: int) -> List[Path]:
    return [[tuple(p) + (height,)] for p in points]


def local_movement(P: Sequence[Sequence[int]], Q: Sequence[Sequence[int]], k: int,
                   layer_offset: int = 1) -> Wiring:
    """Reroute each wire inside its k-cell using three layers.

    Raises:
        InvalidInputError: If a pair spans two k-cells or a cell holds two points.
    """
    P = check_points(P, label="origin")
    Q = check_points(Q, label="destination")
    if len(P) != len(Q):
        raise InvalidInputError(f"{len(P)} origins but {len(Q)} destinations")
    paths = _start(P, layer_offset)
    if paths:
        _local(paths, Q, k)
    return fragment(paths)


def global_movement(P: Sequence[Sequence[int]], k: int, n1: int, layer_offset: int = 1) -> Wiring:
    """Translate points of Box(n) by (k * n1, 0, ..., 0) in n1 + 2 layers."""
    P = check_points(P, label="origin")
    for p in P:
        if not 1 <= p[0] <= n1:
            raise InvalidInputError(f"First coordinate of {p} is outside 1..{n1}")
    paths = _start(P, layer_offset)
    if paths:
        _shift(paths, 0, k * n1, 1, n1)
    return fragment(paths)


def compress(P: Sequence[Sequence[int]], k: int, base: int = 0, layer_offset: int = 1) -> Wiring:
    """Wire a k-spaced set P to comp_k(P) + base.

    Raises:
        InvalidInputError: If P uses more than one residue modulo k.
    """
    paths = _start(check_points(P, label="origin"), layer_offset)
    if paths:
        _compress(paths, k, base)
    return fragment(paths)


def expand(Q: Sequence[Sequence[int]], k: int, base: int = 0, layer_offset: int = 1) -> Wiring:
    """Wire comp_k(Q) + base to the k-spaced set Q."""
    Q = check_points(Q, label="destination")
    paths = _start([tuple(c + base for c in comp_point(q, k)) for q in Q], layer_offset)
    if paths:
        _expand(paths, Q, k, base)
    return fragment(paths)
