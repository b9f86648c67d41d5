"""Minimum-area enclosing triangles, derived from the generally 3-stable set.

Every locally minimal enclosing triangle touches the polygon with all three
side midpoints, and those midpoints form a (generally 3-stable) inscribed
triangle; so mapping each generally 3-stable triangle to the unique triangle
having its corners as side midpoints, and filtering by containment, yields a
superset of the local minima and hence the global minimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import FrozenSet, Optional, Tuple

from .counters import Counters
from .exact_geom import Point, orientation
from .general_stable import GTriangle, enumerate_g3stable
from .polygon import Polygon


class CollinearMidpointsError(ValueError):
    """The three prescribed side midpoints are collinear."""


class NoCandidateError(RuntimeError):
    """No enclosing candidate was produced; signals an implementation bug."""


@dataclass(frozen=True)
class EnclosingTriangle:
    """An enclosing triangle whose side midpoints are the source triangle's
    corners: midpoint(b, c) = source A, midpoint(c, a) = B, midpoint(a, b) = C."""

    a: Point
    b: Point
    c: Point
    source: GTriangle
    area: Fraction

    def key(self) -> Tuple:
        return tuple(sorted((pt.x, pt.y) for pt in (self.a, self.b, self.c)))


def anticomplementary(a_mid: Point, b_mid: Point, c_mid: Point) -> Tuple[Point, Point, Point]:
    """The unique triangle having the three given points as side midpoints;
    its area is exactly four times theirs."""
    if orientation(a_mid, b_mid, c_mid) == 0:
        raise CollinearMidpointsError("midpoints are collinear")
    return (b_mid + c_mid - a_mid,
            c_mid + a_mid - b_mid,
            a_mid + b_mid - c_mid)


def anticomplementary_of(g: GTriangle) -> Optional[EnclosingTriangle]:
    mid_a, mid_b, mid_c = g.points()
    try:
        a, b, c = anticomplementary(mid_a, mid_b, mid_c)
    except CollinearMidpointsError:
        return None
    return EnclosingTriangle(a, b, c, g, 4 * g.area)


def contains(p: Polygon, a: Point, b: Point, c: Point) -> bool:
    """True when every polygon vertex lies inside or on the closed triangle."""
    o = orientation(a, b, c)
    if o == 0:
        raise ValueError("containment test against a degenerate triangle")
    if o > 0:
        b, c = c, b  # normalize to clockwise
    return _contains_clockwise(p, a, b, c)


def _contains_clockwise(p: Polygon, a: Point, b: Point, c: Point) -> bool:
    # clear denominators once so the per-vertex tests stay in integers
    xs, ys, scale = p.int_coords()
    den = scale
    for pt in (a, b, c):
        den = den * pt.x.denominator // gcd(den, pt.x.denominator)
        den = den * pt.y.denominator // gcd(den, pt.y.denominator)
    pts = [(int(pt.x * den), int(pt.y * den)) for pt in (a, b, c)]
    mul = den // scale
    n = p.n
    for i in range(n):
        vx = xs[i] * mul
        vy = ys[i] * mul
        for (px, py), (qx, qy) in ((pts[0], pts[1]), (pts[1], pts[2]), (pts[2], pts[0])):
            if (qx - px) * (vy - py) - (qy - py) * (vx - px) > 0:
                return False  # vertex strictly left of a clockwise side
    return True


def min_enclosing_triangle(p: Polygon, counters: Optional[Counters] = None
                           ) -> Tuple[EnclosingTriangle, FrozenSet[EnclosingTriangle]]:
    """The minimum-area enclosing triangle and the full set of minimizers
    (deduplicated by exact vertex coordinates)."""
    candidates = enumerate_g3stable(p, counters)
    if not candidates:
        raise NoCandidateError("no generally 3-stable triangle found")
    best_area: Optional[Fraction] = None
    minima = {}
    for g in candidates:
        tri = anticomplementary_of(g)
        if tri is None:
            continue
        if not contains(p, tri.a, tri.b, tri.c):
            continue
        if best_area is None or tri.area < best_area:
            best_area = tri.area
            minima = {tri.key(): tri}
        elif tri.area == best_area:
            minima.setdefault(tri.key(), tri)
    if best_area is None:
        raise NoCandidateError("no generally 3-stable candidate encloses the polygon")
    chosen = min(minima.values(), key=lambda t: t.key())
    return chosen, frozenset(minima.values())
