"""Lattice paths, wirings and grid helpers.

Points are 1-based integer tuples. A wire point carries its height as the last
coordinate; the other coordinates are horizontal.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from fatgraph.domain.errors import InvalidInputError

Point = Tuple[int, ...]
Path = List[Point]


def rise(path: Path, height: int) -> None:
    """Extend a path vertically up to ``height``."""
    x = path[-1]
    while x[-1] < height:
        x = x[:-1] + (x[-1] + 1,)
        path.append(x)


def walk(path: Path, axis: int, target: int) -> None:
    """Extend a path along one horizontal axis at its current height."""
    x = path[-1]
    step = 1 if target > x[axis] else -1
    while x[axis] != target:
        x = x[:axis] + (x[axis] + step,) + x[axis + 1:]
        path.append(x)


def height_of(paths: Sequence[Path]) -> int:
    heights = {path[-1][-1] for path in paths}
    if len(heights) > 1:
        raise InvalidInputError(f"Wires end at different heights {sorted(heights)}")
    return heights.pop()


def comp(x: int, k: int) -> int:
    """Index of the k-cell containing coordinate x (cells start at 0)."""
    return (x - 1) // k


def comp_point(point: Sequence[int], k: int) -> Point:
    return tuple(comp(x, k) for x in point)


def magnify(point: Sequence[int], k: int, residue: int) -> Point:
    """Inverse of comp_point on residue class ``residue`` in 1..k."""
    if not 1 <= residue <= k:
        raise InvalidInputError(f"Residue {residue} is outside 1..{k}")
    return tuple(k * c + residue for c in point)


def residues(points: Iterable[Sequence[int]], k: int) -> set:
    return {(x - 1) % k + 1 for point in points for x in point}


def snake_order(dimension: int, side: int) -> List[Point]:
    """All points of the cube [side]^dimension, consecutive ones at unit distance."""
    if dimension == 0:
        return [()]
    inner = snake_order(dimension - 1, side)
    order: List[Point] = []
    for i in range(1, side + 1):
        layer = inner if i % 2 == 1 else inner[::-1]
        order.extend((i,) + p for p in layer)
    return order


def check_points(points: Sequence[Sequence[int]], n: Optional[Sequence[int]] = None,
                 label: str = "point") -> List[Point]:
    """Convert to tuples and check distinctness and, with ``n``, membership in Box(n)."""
    result = [tuple(int(x) for x in p) for p in points]
    if len(set(result)) != len(result):
        raise InvalidInputError(f"Duplicate {label}s")
    if n is not None:
        for p in result:
            if len(p) != len(n) or any(not 1 <= x <= side for x, side in zip(p, n)):
                raise InvalidInputError(f"{label.capitalize()} {p} is outside Box{tuple(n)}")
    return result


@dataclass
class Wiring:
    """Vertex-disjoint lattice paths from origins on the bottom layer to destinations on the top."""
    wires: List[Path]
    origins: List[Point]
    destinations: List[Point]
    corner: Point
    box: Point
    length_bound: Optional[int] = None
    stats: Dict[str, Any] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return len(self.box)

    @property
    def bottom(self) -> int:
        return self.corner[-1]

    @property
    def height(self) -> int:
        return self.box[-1]

    @property
    def max_length(self) -> int:
        return max((len(w) - 1 for w in self.wires), default=0)

    def layer(self, height: int) -> List[Tuple[int, Point]]:
        """(wire index, horizontal point) pairs of all wire points at a height."""
        return [
            (index, point[:-1])
            for index, wire in enumerate(self.wires)
            for point in wire
            if point[-1] == height
        ]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.dimension,
            "corner": list(self.corner),
            "box": list(self.box),
            "length_bound": self.length_bound,
            "stats": self.stats,
            "wires": [
                {"origin": list(o), "destination": list(t), "path": [list(p) for p in w]}
                for o, t, w in zip(self.origins, self.destinations, self.wires)
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Wiring":
        try:
            wires = data["wires"]
            return cls(
                wires=[[tuple(int(x) for x in p) for p in w["path"]] for w in wires],
                origins=[tuple(w["origin"]) for w in wires],
                destinations=[tuple(w["destination"]) for w in wires],
                corner=tuple(data["corner"]),
                box=tuple(data["box"]),
                length_bound=data.get("length_bound"),
                stats=dict(data.get("stats", {})),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidInputError(f"Malformed wiring document: {e}")


def fragment(paths: List[Path]) -> Wiring:
    """Wrap paths that share a start height and an end height."""
    if not paths:
        return Wiring([], [], [], (), ())
    points = [p for path in paths for p in path]
    dimension = len(points[0])
    corner = tuple(min(p[a] for p in points) for a in range(dimension - 1)) + (paths[0][0][-1],)
    box = tuple(max(p[a] for p in points) for a in range(dimension - 1)) + (height_of(paths),)
    return Wiring(
        wires=paths,
        origins=[path[0][:-1] for path in paths],
        destinations=[path[-1][:-1] for path in paths],
        corner=corner,
        box=box,
    )
