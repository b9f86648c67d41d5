"""Exact planar primitives over rational coordinates.

Every predicate in the package bottoms out here (or in the integer kernels,
which must agree bit for bit): orientation signs, perpendicular-distance
comparisons against a line, and ray-ray intersection with an explicit
point-at-infinity case.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

#: Exact rational coordinate type (reduced p/q with q > 0).
Coord = Fraction

# Ordering results for distance comparisons.
LESS = -1
EQUAL = 0
GREATER = 1


class DegenerateLineError(ValueError):
    """A line was requested through two coincident points."""


class ZeroDirectionError(ValueError):
    """A ray was given a zero direction vector."""


def _coord(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class Point:
    """An exact rational point; also used as a direction vector."""

    x: Coord
    y: Coord

    def __post_init__(self):
        object.__setattr__(self, "x", _coord(self.x))
        object.__setattr__(self, "y", _coord(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __rmul__(self, scalar) -> "Point":
        s = _coord(scalar)
        return Point(s * self.x, s * self.y)

    def __iter__(self):
        return iter((self.x, self.y))

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


class _AtInfinity:
    """Marker for a ray intersection that does not exist.

    It compares as strictly farther than any finite point in distance
    comparisons, which is exactly how an undefined corner of the feasibility
    wedge must behave.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "AT_INFINITY"


AT_INFINITY = _AtInfinity()

#: A finite point or the at-infinity marker.
ExtendedPoint = Union[Point, _AtInfinity]


def is_at_infinity(p: ExtendedPoint) -> bool:
    return p is AT_INFINITY


def format_rational(v) -> str:
    """Canonical text form of an exact rational: 'p' or 'p/q' in lowest terms."""
    f = v if isinstance(v, Fraction) else Fraction(v)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def cross(u: Point, v: Point) -> Fraction:
    """2D cross product u.x*v.y - u.y*v.x."""
    return u.x * v.y - u.y * v.x


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of cross(q - p, r - p): +1 counterclockwise, -1 clockwise, 0 collinear."""
    c = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if c > 0:
        return 1
    if c < 0:
        return -1
    return 0


def dist_compare(b: Point, c: Point, x: Point, y: Point) -> int:
    """Compare the distances of x and y to the line through b and c.

    Returns LESS/EQUAL/GREATER for x's distance relative to y's.  Distances
    are never constructed: |cross(c-b, x-b)| is compared with
    |cross(c-b, y-b)|, the shared |bc| denominator cancelling.
    """
    if b == c:
        raise DegenerateLineError(f"line through coincident points {b}")
    d = c - b
    dx = abs(cross(d, x - b))
    dy = abs(cross(d, y - b))
    if dx < dy:
        return LESS
    if dx > dy:
        return GREATER
    return EQUAL


def dist_compare_ext(b: Point, c: Point, x: Point, y: ExtendedPoint) -> int:
    """As dist_compare, but y may be AT_INFINITY (then x is strictly closer)."""
    if b == c:
        raise DegenerateLineError(f"line through coincident points {b}")
    if is_at_infinity(y):
        return LESS
    return dist_compare(b, c, x, y)


def ray_intersect(o1: Point, d1: Point, o2: Point, d2: Point) -> ExtendedPoint:
    """Intersect the rays o1 + t*d1 and o2 + s*d2 (t, s >= 0).

    Returns the finite intersection point when both ray parameters are
    nonnegative, and AT_INFINITY when the rays are parallel or their
    supporting lines meet behind one of the origins.
    """
    if d1.x == 0 and d1.y == 0:
        raise ZeroDirectionError("first ray has zero direction")
    if d2.x == 0 and d2.y == 0:
        raise ZeroDirectionError("second ray has zero direction")
    w = cross(d1, d2)
    if w == 0:
        return AT_INFINITY
    delta = o2 - o1
    t = cross(delta, d2) / w
    s = cross(delta, d1) / w
    if t < 0 or s < 0:
        return AT_INFINITY
    return o1 + t * d1
