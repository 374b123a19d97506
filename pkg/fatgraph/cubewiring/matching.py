"""Wiring an arbitrary matching between the bottom and top faces of a grid box."""

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from fatgraph.cubewiring.movement import _compress, _expand, _local, _shift
from fatgraph.cubewiring.paths import Path, Point, Wiring, check_points, height_of, rise
from fatgraph.cubewiring.pushpull import push_pull_paths
from fatgraph.domain.errors import InvalidInputError, UnsupportedDimensionError, WiringError

logger = logging.getLogger(__name__)

PUSH, PULL, STAY = "push", "pull", "stay"
# offset below the residue-0 position, and first real height above the phase start
_SUBGRID = {PUSH: (2, 3), PULL: (1, 4)}


def next_power_of_two(x: int) -> int:
    return 1 << (x - 1).bit_length()


@dataclass(frozen=True)
class WiringInstance:
    """A perfect matching between origins P and destinations Q in Box_{d-1}(n)."""
    dimension: int
    n: Tuple[int, ...]
    pairs: Tuple[Tuple[Point, Point], ...]

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(x) for x in self.n))
        object.__setattr__(self, "pairs", tuple((tuple(p), tuple(q)) for p, q in self.pairs))
        if len(self.n) != self.dimension - 1:
            raise InvalidInputError(
                f"Box sides {self.n} do not match dimension {self.dimension} (need {self.dimension - 1})"
            )
        if any(x < 1 for x in self.n):
            raise InvalidInputError(f"Box sides must be positive, got {self.n}")
        check_points(self.P, self.n, "origin")
        check_points(self.Q, self.n, "destination")

    @property
    def P(self) -> List[Point]:
        return [p for p, _ in self.pairs]

    @property
    def Q(self) -> List[Point]:
        return [q for _, q in self.pairs]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.dimension,
            "n": list(self.n),
            "pairs": [[list(p), list(q)] for p, q in self.pairs],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "WiringInstance":
        try:
            return cls(
                dimension=int(data["d"]),
                n=tuple(data["n"]),
                pairs=tuple((tuple(p), tuple(q)) for p, q in data["pairs"]),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidInputError(f"Malformed matching document: {e}")

    @classmethod
    def random_permutation(cls, dimension: int, n: Sequence[int], seed: int = 0,
                           size: Optional[int] = None) -> "WiringInstance":
        """Random matching on ``size`` random cells (all cells by default)."""
        rng = random.Random(seed)
        cells = list(itertools.product(*(range(1, x + 1) for x in n)))
        size = len(cells) if size is None else size
        origins = sorted(rng.sample(cells, size))
        destinations = rng.sample(cells, size)
        return cls(dimension, tuple(n), tuple(zip(origins, destinations)))

    @classmethod
    def identity(cls, dimension: int, n: Sequence[int]) -> "WiringInstance":
        cells = list(itertools.product(*(range(1, x + 1) for x in n)))
        return cls(dimension, tuple(n), tuple((c, c) for c in cells))


class _Router:
    """Recursive rough reordering on a full, 3-spaced set of wires.

    A sub-box with offset o and sides n owns horizontal coordinates
    R + 1 .. R + 18 n with R = 18 o; its wires sit at R + 3c for the cells c
    of Box(n) and their destinations lie in o + Box(n).
    """

    def __init__(self, paths: List[Path], destinations: List[Point], check_subgrids: bool = False):
        self.paths = paths
        self.destinations = destinations
        self.check_subgrids = check_subgrids
        self.levels = 0

    def _here(self, i: int) -> Point:
        return self.paths[i][-1][:-1]

    def route(self, ids: List[int], R: Point, o: Point, n: Tuple[int, ...]) -> int:
        paths = [self.paths[i] for i in ids]
        h = height_of(paths)
        if all(x == 1 for x in n):
            return _local(paths, [tuple(r + 18 for r in R)], 18)

        self.levels += 1
        a = max(range(len(n)), key=lambda b: (n[b], -b))
        half = n[a] // 2
        cell = {i: tuple((x - r) // 3 for x, r in zip(self._here(i), R)) for i in ids}
        goal = {i: tuple(q - s for q, s in zip(self.destinations[i], o)) for i in ids}
        kind = {}
        for i in ids:
            if cell[i][a] <= half < goal[i][a]:
                kind[i] = PUSH
            elif goal[i][a] <= half < cell[i][a]:
                kind[i] = PULL
            else:
                kind[i] = STAY
        push = [i for i in ids if kind[i] == PUSH]
        pull = [i for i in ids if kind[i] == PULL]
        logger.debug("Routing level %d: n=%s, axis %d, %d push / %d pull / %d stay",
                     self.levels, n, a, len(push), len(pull), len(ids) - 2 * len(push))

        spread = []
        for i in ids:
            shift = _SUBGRID[kind[i]][0] if kind[i] != STAY else 0
            spread.append(tuple(r + 3 * c - shift for r, c in zip(R, cell[i])))
        _local(paths, spread, 3)
        phase_start = {i: len(self.paths[i]) for i in ids}
        for i in push:
            rise(self.paths[i], h + 3)
        for i in pull:
            rise(self.paths[i], h + 4)

        tops = [h + 4]
        if push:
            tops.append(self._subgrid(push, [cell[i] for i in push], [cell[i] for i in pull], R, n, h, PUSH))
            tops.append(self._subgrid(pull, [cell[i] for i in pull], [cell[i] for i in push], R, n, h, PULL))
        h2 = max(tops)
        for path in paths:
            rise(path, h2)
        if self.check_subgrids:
            self._check_phase(ids, kind, phase_start, R, h)

        settled = []
        for i in ids:
            shift = _SUBGRID[kind[i]][0] if kind[i] != STAY else 0
            settled.append(tuple((x - r + shift) // 3 for x, r in zip(self._here(i), R)))
        _local(paths, [tuple(r + 3 * c for r, c in zip(R, s)) for s in settled], 3)
        _shift(paths, a, 15 * n[a] // 2, R[a] + 3 * (half + 1), R[a] + 3 * n[a])

        child = n[:a] + (half,) + n[a + 1:]
        lower = [i for i, s in zip(ids, settled) if s[a] <= half]
        upper = [i for i, s in zip(ids, settled) if s[a] > half]
        for i in lower:
            if self.destinations[i][a] - o[a] > half:
                raise WiringError(f"Wire {i} was sorted into the wrong half")
        R_up = R[:a] + (R[a] + 9 * n[a],) + R[a + 1:]
        o_up = o[:a] + (o[a] + half,) + o[a + 1:]
        top = max(self.route(lower, R, o, child), self.route(upper, R_up, o_up, child))
        for path in paths:
            rise(path, top)
        return top

    def _subgrid(self, ids: List[int], starts: List[Point], targets: List[Point],
                 R: Point, n: Tuple[int, ...], h: int, kind: str) -> int:
        """Run the lexicographic wiring inside the (1,3)- or (2,3)-subgrid."""
        offset, lift = _SUBGRID[kind]
        inner = push_pull_paths(starts, targets, n, 1)

        def real(point: Point) -> Point:
            horizontal = tuple(r + 3 * x - offset for r, x in zip(R, point[:-1]))
            return horizontal + (h + lift + 3 * (point[-1] - 1),)

        top = h + lift
        for i, sub in zip(ids, inner):
            path = self.paths[i]
            if real(sub[0]) != path[-1]:
                raise WiringError(f"Wire {i} is not at its subgrid start {real(sub[0])}")
            for before, after in zip(sub, sub[1:]):
                x, y = real(before), real(after)
                step = tuple((b - a) // 3 for a, b in zip(x, y))
                path.append(tuple(a + s for a, s in zip(x, step)))
                path.append(tuple(a + 2 * s for a, s in zip(x, step)))
                path.append(y)
            top = max(top, path[-1][-1])
        return top

    def _check_phase(self, ids, kind, phase_start, R, h) -> None:
        dimension = len(R) + 1
        for i in ids:
            for point in self.paths[i][phase_start[i]:]:
                if point[-1] < h + 3:
                    continue
                rel = [(x - r) % 3 for x, r in zip(point[:-1], R)]
                if kind[i] == STAY:
                    ok = all(v == 0 for v in rel)
                else:
                    residue = 1 if kind[i] == PUSH else 2
                    lift = _SUBGRID[kind[i]][1]
                    on_grid = sum(v == residue for v in rel) + ((point[-1] - h - lift) % 3 == 0)
                    ok = on_grid >= dimension - 1
                if not ok:
                    raise WiringError(f"{kind[i]} wire {i} leaves its subgrid at {point}")


def wire_matching(inst: WiringInstance, length_factor: int = 200, check_subgrids: bool = False) -> Wiring:
    """Route every pair of the matching by vertex-disjoint lattice paths.

    Origins sit on layer 1 and destinations on the top layer of a box with
    horizontal sides 36 n.

    Args:
        inst: Matching instance, dimension at least 3.
        length_factor: Declared wire-length bound is length_factor * d * sum(n).
        check_subgrids: Assert the subgrid discipline during rough reordering.

    Raises:
        UnsupportedDimensionError: For dimension below 3.
        WiringError: If an internal routing invariant breaks.
    """
    if inst.dimension < 3:
        raise UnsupportedDimensionError(inst.dimension, 3, "Cube wiring")
    padded = tuple(next_power_of_two(x) for x in inst.n)
    cells = list(itertools.product(*(range(1, x + 1) for x in padded)))
    used_p, used_q = set(inst.P), set(inst.Q)
    dummies = list(zip(
        [c for c in cells if c not in used_p],
        [c for c in cells if c not in used_q],
    ))
    pairs = list(inst.pairs) + dummies
    paths = [[p + (1,)] for p, _ in pairs]

    _expand(paths, [tuple(3 * x for x in p) for p, _ in pairs], 3, 1)
    router = _Router(paths, [q for _, q in pairs], check_subgrids)
    zero = (0,) * len(padded)
    router.route(list(range(len(paths))), zero, zero, padded)
    top = _compress(paths, 18, 1)

    wires = paths[:len(inst.pairs)]
    dimension = inst.dimension
    wiring = Wiring(
        wires=wires,
        origins=list(inst.P),
        destinations=list(inst.Q),
        corner=(1,) * dimension,
        box=tuple(36 * x for x in inst.n) + (top,),
        length_bound=length_factor * dimension * sum(inst.n),
    )
    wiring.stats = {
        "wires": len(wires),
        "dummy_wires": len(dummies),
        "padded_n": list(padded),
        "levels": router.levels,
        "height": top,
        "height_ratio": top / sum(inst.n),
        "max_length": wiring.max_length,
        "length_ratio": wiring.max_length / (dimension * sum(inst.n)),
    }
    logger.debug("Wired %d pairs (%d dummies) in height %d", len(wires), len(dummies), top)
    return wiring
