"""Wiring the lexicographic matching between two point sets of a box."""

from typing import List, Optional, Sequence, Tuple

from fatgraph.cubewiring.movement import _shift
from fatgraph.cubewiring.paths import Path, Point, Wiring, check_points, fragment, rise, walk
from fatgraph.domain.errors import InvalidInputError


def _sorted_paths(P: List[Point], Q: List[Point], n: Tuple[int, ...], h0: int) -> List[Path]:
    """Paths from sorted(P)[i] to sorted(Q)[i], with n[0] >= n[1] >= ...

    Everything first moves by 5 n1 along axis 0. Wires are then grouped into
    runs sharing their first origin and first destination coordinate; run j
    uses layer T + j alone, where the remaining coordinates are wired
    recursively with axis 0 playing the role of height, before walking back
    along axis 0.
    """
    P, Q = sorted(P), sorted(Q)
    n1 = n[0]
    paths = [[p + (h0,)] for p in P]
    base = _shift(paths, 0, 5 * n1, 1, n1)

    runs: List[List[int]] = []
    for i in range(len(P)):
        if i == 0 or P[i][0] != P[i - 1][0] or Q[i][0] != Q[i - 1][0]:
            runs.append([])
        runs[-1].append(i)

    for j, members in enumerate(runs):
        level = base + j
        for i in members:
            rise(paths[i], level)
        if len(n) > 1:
            start = 5 * n1 + P[members[0]][0] + 1
            inner = _sorted_paths([P[i][1:] for i in members], [Q[i][1:] for i in members], n[1:], 1)
            for i, sub in zip(members, inner):
                paths[i].extend((start - p[-1],) + p[:-1] + (level,) for p in sub[1:])
        for i in members:
            walk(paths[i], 0, Q[i][0])

    top = base + len(runs)
    for path in paths:
        rise(path, top)
    return paths


def push_pull_paths(P: Sequence[Point], Q: Sequence[Point], n: Sequence[int], h0: int) -> List[Path]:
    """Lexicographic-matching paths aligned with the order of P.

    Axes are relabeled so that box sides are non-increasing; the lexicographic
    order is taken in the relabeled coordinates.
    """
    order = sorted(range(len(n)), key=lambda a: (-n[a], a))
    permuted = {tuple(p[a] for a in order): tuple(p) for p in P}
    paths = _sorted_paths(
        list(permuted), [tuple(q[a] for a in order) for q in Q], tuple(n[a] for a in order), h0
    )
    by_start = {}
    for path in paths:
        restored = []
        for point in path:
            horizontal = [0] * len(order)
            for i, a in enumerate(order):
                horizontal[a] = point[i]
            restored.append(tuple(horizontal) + (point[-1],))
        by_start[restored[0][:-1]] = restored
    return [by_start[tuple(p)] for p in P]


def push_pull(P: Sequence[Sequence[int]], Q: Sequence[Sequence[int]],
              n: Optional[Sequence[int]] = None, layer_offset: int = 1) -> Wiring:
    """Wire the lexicographic matching between P and Q inside Box(6n).

    Args:
        P: Origins in Box(n).
        Q: Destinations in Box(n), as many as origins.
        n: Box sides; defaults to the coordinatewise maximum of P and Q.
        layer_offset: Height of the first layer.

    Returns:
        Fragment wiring sorted(P)[i] to sorted(Q)[i] (sorted with the largest side first).
    """
    P = check_points(P, label="origin")
    Q = check_points(Q, label="destination")
    if len(P) != len(Q):
        raise InvalidInputError(f"{len(P)} origins but {len(Q)} destinations")
    if not P:
        return fragment([])
    if n is None:
        n = tuple(max(p[a] for p in P + Q) for a in range(len(P[0])))
    check_points(P, n, "origin")
    check_points(Q, n, "destination")
    return fragment(push_pull_paths(P, Q, tuple(n), layer_offset))
