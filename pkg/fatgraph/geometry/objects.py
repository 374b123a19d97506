"""Fat objects (balls and axis-aligned boxes) with exact rational geometry."""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from fatgraph.domain.errors import InvalidInputError

Coords = Tuple[Fraction, ...]


def to_fraction(value) -> Fraction:
    """Convert an int, Fraction, "p/q" string or float to an exact Fraction.

    Floats are read through their shortest decimal repr so that 0.1 becomes 1/10.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidInputError(f"Expected a number, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InvalidInputError(f"Non-finite coordinate {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidInputError(f"Cannot parse rational {value!r}: {e}")
    raise InvalidInputError(f"Expected a number, got {type(value).__name__}")


def to_coords(values: Sequence) -> Coords:
    return tuple(to_fraction(v) for v in values)


class Diameter(NamedTuple):
    """Exact squared diameter plus a rounded value for reporting."""
    squared: Fraction
    approx: float


@dataclass(frozen=True)
class Ball:
    """Closed Euclidean ball."""
    center: Coords
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", to_coords(self.center))
        object.__setattr__(self, "radius", to_fraction(self.radius))
        if len(self.center) < 1:
            raise InvalidInputError("Ball center must have at least one coordinate")
        if self.radius <= 0:
            raise InvalidInputError(f"Ball radius must be positive, got {self.radius}")

    @property
    def dimension(self) -> int:
        return len(self.center)

    def bounds(self) -> Tuple[Coords, Coords]:
        lo = tuple(c - self.radius for c in self.center)
        hi = tuple(c + self.radius for c in self.center)
        return lo, hi

    def diameter_squared(self) -> Fraction:
        return 4 * self.radius * self.radius

    def fatness(self) -> float:
        return 1.0

    def inner_ball(self) -> Tuple[Coords, Fraction]:
        return self.center, self.radius

    def translated_scaled(self, offset: Coords, scale: Fraction) -> "Ball":
        """Return the ball under x -> (x - offset) / scale."""
        return Ball(tuple((c - o) / scale for c, o in zip(self.center, offset)), self.radius / scale)


@dataclass(frozen=True)
class Box:
    """Closed axis-aligned box given by its minimum corner and side lengths."""
    min_corner: Coords
    sides: Coords

    def __post_init__(self):
        object.__setattr__(self, "min_corner", to_coords(self.min_corner))
        object.__setattr__(self, "sides", to_coords(self.sides))
        if len(self.min_corner) != len(self.sides):
            raise InvalidInputError(
                f"Box corner has {len(self.min_corner)} coordinates but {len(self.sides)} sides"
            )
        if len(self.sides) < 1:
            raise InvalidInputError("Box must have at least one side")
        if any(s <= 0 for s in self.sides):
            raise InvalidInputError(f"Box sides must be positive, got {self.sides}")

    @property
    def dimension(self) -> int:
        return len(self.sides)

    @property
    def max_corner(self) -> Coords:
        return tuple(m + s for m, s in zip(self.min_corner, self.sides))

    def bounds(self) -> Tuple[Coords, Coords]:
        return self.min_corner, self.max_corner

    def diameter_squared(self) -> Fraction:
        return sum((s * s for s in self.sides), Fraction(0))

    def fatness(self) -> float:
        return float(min(self.sides)) / math.sqrt(self.diameter_squared())

    def inner_ball(self) -> Tuple[Coords, Fraction]:
        center = tuple(m + s / 2 for m, s in zip(self.min_corner, self.sides))
        return center, min(self.sides) / 2

    def translated_scaled(self, offset: Coords, scale: Fraction) -> "Box":
        """Return the box under x -> (x - offset) / scale."""
        return Box(
            tuple((m - o) / scale for m, o in zip(self.min_corner, offset)),
            tuple(s / scale for s in self.sides),
        )


Shape = Union[Ball, Box]


@dataclass(frozen=True)
class FatObject:
    """A shape tagged with its vertex id."""
    id: int
    shape: Shape

    @property
    def dimension(self) -> int:
        return self.shape.dimension

    def bounds(self) -> Tuple[Coords, Coords]:
        return self.shape.bounds()


def diameter(o: Union[FatObject, Shape]) -> Diameter:
    """Euclidean diameter: 2r for balls, the diagonal for boxes."""
    shape = o.shape if isinstance(o, FatObject) else o
    squared = shape.diameter_squared()
    return Diameter(squared, math.sqrt(squared))


def fatness(o: Union[FatObject, Shape]) -> float:
    shape = o.shape if isinstance(o, FatObject) else o
    return shape.fatness()


def inner_ball(o: Union[FatObject, Shape]) -> Tuple[Coords, Fraction]:
    """Largest ball contained in the object, with exact center and radius."""
    shape = o.shape if isinstance(o, FatObject) else o
    return shape.inner_ball()


def bounding_box(o: Union[FatObject, Shape]) -> Tuple[Coords, Coords]:
    shape = o.shape if isinstance(o, FatObject) else o
    return shape.bounds()


def _squared_distance_to_box(point: Coords, box: Box) -> Fraction:
    total = Fraction(0)
    for x, lo, side in zip(point, box.min_corner, box.sides):
        hi = lo + side
        if x < lo:
            total += (lo - x) ** 2
        elif x > hi:
            total += (x - hi) ** 2
    return total


def shapes_intersect(a: Shape, b: Shape) -> bool:
    """Exact intersection test for closed shapes; tangency counts."""
    if a.dimension != b.dimension:
        raise InvalidInputError(
            f"Cannot intersect objects of dimension {a.dimension} and {b.dimension}"
        )
    if isinstance(a, Ball) and isinstance(b, Ball):
        dist_sq = sum(((x - y) ** 2 for x, y in zip(a.center, b.center)), Fraction(0))
        return dist_sq <= (a.radius + b.radius) ** 2
    if isinstance(a, Box) and isinstance(b, Box):
        for lo_a, s_a, lo_b, s_b in zip(a.min_corner, a.sides, b.min_corner, b.sides):
            if lo_a > lo_b + s_b or lo_b > lo_a + s_a:
                return False
        return True
    ball, box = (a, b) if isinstance(a, Ball) else (b, a)
    return _squared_distance_to_box(ball.center, box) <= ball.radius ** 2


def intersects(a: Union[FatObject, Shape], b: Union[FatObject, Shape]) -> bool:
    """Decide whether two closed fat objects intersect.

    Args:
        a: First object.
        b: Second object.

    Returns:
        True when the objects share at least one point.

    Raises:
        InvalidInputError: If the dimensions differ.
    """
    shape_a = a.shape if isinstance(a, FatObject) else a
    shape_b = b.shape if isinstance(b, FatObject) else b
    return shapes_intersect(shape_a, shape_b)


def strictly_inside_cube(o: Union[FatObject, Shape], lower: Coords, side: Fraction) -> bool:
    """True when the closed object lies in the open cube [lower, lower + side]."""
    lo, hi = bounding_box(o)
    return all(l > c and h < c + side for l, h, c in zip(lo, hi, lower))


def meets_cube(o: Union[FatObject, Shape], lower: Coords, side: Fraction) -> bool:
    """True when the object intersects the closed cube [lower, lower + side]."""
    shape = o.shape if isinstance(o, FatObject) else o
    return shapes_intersect(shape, Box(lower, tuple(side for _ in lower)))


@dataclass(frozen=True)
class ObjectSet:
    """A collection of fat objects of one dimension with ids 0..n-1."""
    dimension: int
    objects: Tuple[FatObject, ...]

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        if self.dimension < 2:
            raise InvalidInputError(f"Dimension must be at least 2, got {self.dimension}")
        for index, obj in enumerate(self.objects):
            if obj.dimension != self.dimension:
                raise InvalidInputError(
                    f"Object {obj.id} has dimension {obj.dimension}, expected {self.dimension}"
                )
            if obj.id != index:
                raise InvalidInputError(
                    f"Object ids must be contiguous from 0; position {index} has id {obj.id}"
                )

    def __len__(self) -> int:
        return len(self.objects)

    def __iter__(self):
        return iter(self.objects)

    def __getitem__(self, index: int) -> FatObject:
        return self.objects[index]

    def diameters(self) -> List[Diameter]:
        return [diameter(o) for o in self.objects]

    @property
    def min_diameter(self) -> Optional[float]:
        return min((d.approx for d in self.diameters()), default=None)

    @property
    def max_diameter(self) -> Optional[float]:
        return max((d.approx for d in self.diameters()), default=None)

    @property
    def size_ratio(self) -> Optional[float]:
        """Ratio of the largest to the smallest diameter."""
        if not self.objects:
            return None
        return self.max_diameter / self.min_diameter

    @property
    def fatness(self) -> float:
        """Minimum fatness over all objects (1.0 for an empty set)."""
        return min((fatness(o) for o in self.objects), default=1.0)

    @classmethod
    def from_shapes(cls, shapes: Sequence[Shape], dimension: Optional[int] = None) -> "ObjectSet":
        if dimension is None:
            if not shapes:
                raise InvalidInputError("Cannot infer the dimension of an empty object set")
            dimension = shapes[0].dimension
        return cls(dimension, tuple(FatObject(i, s) for i, s in enumerate(shapes)))
