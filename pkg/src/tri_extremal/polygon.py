"""Convex polygon model: validation, the vertex/edge unit alphabet, file
parsing and emission, and deterministic random instance generation.

Vertices are stored in clockwise order (counterclockwise input is reversed on
validation).  Indices are 0-based and always refer to the stored clockwise
order; `was_reversed` plus `input_index` recover the caller's positions when
a reversal happened.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from .exact_geom import Point, format_rational


class PolygonError(ValueError):
    """Base class for polygon validation failures."""


class TooFewVertices(PolygonError):
    pass


class NotConvex(PolygonError):
    pass


class DuplicateVertex(PolygonError):
    pass


class PolygonParseError(PolygonError):
    """Syntax error in a polygon file; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class GenerationFailure(PolygonError):
    """random_convex could not fit a strictly convex n-gon in the bound."""


VERTEX = "vertex"
EDGE = "edge"


@dataclass(frozen=True)
class Unit:
    """A vertex v_i or the open directed edge e_i from v_i to v_{i+1}."""

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in (VERTEX, EDGE):
            raise ValueError(f"bad unit kind {self.kind!r}")

    @property
    def is_vertex(self) -> bool:
        return self.kind == VERTEX

    @property
    def is_edge(self) -> bool:
        return self.kind == EDGE

    def code(self) -> int:
        """Position in the cyclic unit order v_0, e_0, v_1, e_1, ..."""
        return 2 * self.index + (1 if self.kind == EDGE else 0)

    def __repr__(self):
        return f"{'v' if self.is_vertex else 'e'}{self.index}"


def vertex_unit(i: int) -> Unit:
    return Unit(VERTEX, i)


def edge_unit(i: int) -> Unit:
    return Unit(EDGE, i)


def unit_from_code(code: int, n: int) -> Unit:
    code %= 2 * n
    return Unit(EDGE if code & 1 else VERTEX, code >> 1)


def term_end(u: Unit, n: int) -> int:
    """Terminal vertex of a unit: the vertex itself, or an edge's clockwise head."""
    if u.is_vertex:
        return u.index % n
    return (u.index + 1) % n


def next_unit(u: Unit, n: int) -> Unit:
    """Clockwise successor in the unit cycle of length 2n."""
    return unit_from_code(u.code() + 1, n)


class Polygon:
    """A strictly convex clockwise polygon with exact rational coordinates.

    Coordinates are kept either as plain Python numbers or as numpy int64
    arrays (large generated instances); accessors always hand out exact
    Python values.  The denominator-cleared integer image used by the sweep
    kernels is cached on first use.
    """

    __slots__ = ("_xs", "_ys", "_numpy_backed", "was_reversed",
                 "_int_lists", "_int_arrays_cache", "_scale", "_maxabs",
                 "_vertices")

    def __init__(self, xs, ys, numpy_backed: bool, was_reversed: bool):
        self._xs = xs
        self._ys = ys
        self._numpy_backed = numpy_backed
        self.was_reversed = was_reversed
        self._int_lists = None
        self._int_arrays_cache = False  # False = not computed, None = unavailable
        self._scale = None
        self._maxabs = None
        self._vertices = None

    def __len__(self) -> int:
        return len(self._xs)

    @property
    def n(self) -> int:
        return len(self._xs)

    def coords(self, i: int):
        """Exact (x, y) of vertex i as Python numbers."""
        if self._numpy_backed:
            return int(self._xs[i]), int(self._ys[i])
        return self._xs[i], self._ys[i]

    def point(self, i: int) -> Point:
        x, y = self.coords(i)
        return Point(x, y)

    @property
    def vertices(self) -> Tuple[Point, ...]:
        """All vertices as Points (materialized on first access; O(n))."""
        if self._vertices is None:
            self._vertices = tuple(self.point(i) for i in range(self.n))
        return self._vertices

    @property
    def is_integral(self) -> bool:
        if self._numpy_backed:
            return True
        return all(isinstance(v, int) or v.denominator == 1
                   for v in self._xs) and \
               all(isinstance(v, int) or v.denominator == 1
                   for v in self._ys)

    def input_index(self, i: int) -> int:
        """Map a stored index back to the caller's original position."""
        return (self.n - 1 - i) if self.was_reversed else i

    def scale_denominator(self) -> int:
        """The uniform factor L clearing all coordinate denominators."""
        self.int_coords()
        return self._scale

    def int_coords(self):
        """Integer image of the polygon: (xs, ys, L) with coordinate lists of
        Python ints equal to L times the true coordinates."""
        if self._int_lists is None:
            if self._numpy_backed:
                xs = [int(v) for v in self._xs]
                ys = [int(v) for v in self._ys]
                self._scale = 1
            else:
                dens = [v.denominator for v in self._xs if isinstance(v, Fraction)]
                dens += [v.denominator for v in self._ys if isinstance(v, Fraction)]
                scale = 1
                for d in dens:
                    scale = scale * d // math.gcd(scale, d)
                if scale == 1:
                    xs = [int(v) for v in self._xs]
                    ys = [int(v) for v in self._ys]
                else:
                    xs = [int(v * scale) for v in self._xs]
                    ys = [int(v * scale) for v in self._ys]
                self._scale = scale
            self._int_lists = (xs, ys)
            self._maxabs = max(max(map(abs, xs)), max(map(abs, ys)))
        return self._int_lists[0], self._int_lists[1], self._scale

    def max_abs_int(self) -> int:
        if self._maxabs is None:
            if self._numpy_backed:
                self._maxabs = int(max(np.abs(self._xs).max(),
                                       np.abs(self._ys).max()))
            else:
                self.int_coords()
        return self._maxabs

    def int_arrays(self):
        """Numpy int64 image (xs, ys, L), or None when it does not fit."""
        if self._int_arrays_cache is False:
            if self._numpy_backed:
                self._int_arrays_cache = (self._xs, self._ys)
                self._scale = 1
                if self._maxabs is None:
                    self._maxabs = int(max(np.abs(self._xs).max(),
                                           np.abs(self._ys).max()))
            else:
                xs, ys, _ = self.int_coords()
                if self._maxabs < 2 ** 62:
                    self._int_arrays_cache = (np.array(xs, dtype=np.int64),
                                              np.array(ys, dtype=np.int64))
                else:
                    self._int_arrays_cache = None
        if self._int_arrays_cache is None:
            return None
        return self._int_arrays_cache[0], self._int_arrays_cache[1], self._scale or 1

    def area2(self) -> Fraction:
        """Twice the polygon area, exact and positive."""
        total = Fraction(0)
        px, py = self.coords(self.n - 1)
        for i in range(self.n):
            x, y = self.coords(i)
            total += Fraction(px) * Fraction(y) - Fraction(x) * Fraction(py)
            px, py = x, y
        return abs(total)

    def __repr__(self):
        return f"Polygon(n={self.n}, reversed={self.was_reversed})"


def _normalize_value(v):
    if isinstance(v, int):
        return v
    f = Fraction(v)
    return int(f) if f.denominator == 1 else f


def _normalize_points(raw) -> Tuple[list, list]:
    xs = []
    ys = []
    for p in raw:
        if isinstance(p, Point):
            x, y = p.x, p.y
        else:
            x, y = p
        xs.append(_normalize_value(x))
        ys.append(_normalize_value(y))
    return xs, ys


def validate(raw_vertices: Iterable) -> Polygon:
    """Build a Polygon from a vertex sequence in boundary order.

    Counterclockwise input is reversed to clockwise (reported through
    `was_reversed`).  Raises TooFewVertices, DuplicateVertex, or NotConvex.
    """
    xs, ys = _normalize_points(raw_vertices)
    n = len(xs)
    if n < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {n}")
    status, idx = _validate_lane(xs, ys)
    reversed_ = False
    if status == 1:
        xs.reverse()
        ys.reverse()
        reversed_ = True
        status, idx = _validate_lane(xs, ys)
    if status == 5:
        raise DuplicateVertex(f"vertices {idx} and {(idx + 1) % n} coincide")
    if status == 2:
        raise NotConvex(f"collinear vertices at index {idx}")
    if status == 3:
        raise NotConvex(f"reflex turn at index {idx}")
    if status == 4:
        raise NotConvex("vertex cycle winds more than once")
    return Polygon(xs, ys, numpy_backed=False, was_reversed=reversed_)


def _validate_lane(xs, ys):
    # local import: kernel depends on polygon for nothing, avoid cycles
    from . import kernel

    return kernel.validate_convex_raw(xs, ys)


def _polygon_from_int_arrays(np_xs, np_ys) -> Polygon:
    """Internal: wrap pre-built clockwise int64 arrays, validating exactly."""
    from . import kernel

    status, idx = kernel.validate_convex_raw(np_xs, np_ys)
    if status == 1:
        np_xs = np_xs[::-1].copy()
        np_ys = np_ys[::-1].copy()
        status, idx = kernel.validate_convex_raw(np_xs, np_ys)
    if status != 0:
        raise NotConvex(f"generated vertex cycle invalid (status {status} at {idx})")
    return Polygon(np_xs, np_ys, numpy_backed=True, was_reversed=False)


_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def _parse_rational(token: str, lineno: int):
    if not _RATIONAL_RE.match(token):
        raise PolygonParseError(lineno, f"bad coordinate {token!r}")
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise PolygonParseError(lineno, f"zero denominator in {token!r}")
        return _normalize_value(Fraction(int(num), int(den)))
    return int(token)


def parse_polygon(text: str) -> Polygon:
    """Parse the polygon file format: one 'x y' pair per line, integers or
    p/q rationals, '#' comments, blank lines ignored."""
    pts = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise PolygonParseError(lineno, f"expected two coordinates, got {len(parts)}")
        pts.append((_parse_rational(parts[0], lineno),
                    _parse_rational(parts[1], lineno)))
    return validate(pts)


def emit_polygon(p: Polygon) -> str:
    """Canonical text form: stored clockwise order, reduced rationals."""
    lines = []
    for i in range(p.n):
        x, y = p.coords(i)
        lines.append(f"{format_rational(x)} {format_rational(y)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Random instance generation
# ---------------------------------------------------------------------------

def random_convex(n: int, seed: int, bound: int) -> Polygon:
    """Deterministic strictly convex polygon with integer coordinates in
    [-bound, bound].

    Small instances use the sum-of-sorted-vectors construction over random
    coordinate deltas, rejecting and regenerating on edge-direction
    collisions.  When collisions are certain (large n relative to bound) the
    deltas are drawn as distinct primitive direction vectors instead, which
    keeps the construction exact at any scale.  Raises GenerationFailure when
    no strictly convex n-gon fits the bound.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if bound < n:
        raise ValueError(f"need bound >= n, got bound={bound} n={n}")
    rng = random.Random(f"{n}:{seed}:{bound}")
    if n <= 50_000 and bound >= 4 * n * n:
        for _ in range(60):
            vecs = _valtr_vectors(rng, n, bound)
            if vecs is not None:
                return _build_from_vectors(vecs)
    return _primitive_instance(rng, n, bound)


def _half(dx: int, dy: int) -> int:
    return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1


def _dir_cmp(u, v) -> int:
    hu, hv = _half(*u), _half(*v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = u[0] * v[1] - u[1] * v[0]
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


def _pm_deltas(rng: random.Random, vals: Sequence[int]) -> list:
    lo, hi = vals[0], vals[-1]
    last_a = last_b = lo
    out = []
    for v in vals[1:-1]:
        if rng.getrandbits(1):
            out.append(v - last_a)
            last_a = v
        else:
            out.append(last_b - v)
            last_b = v
    out.append(hi - last_a)
    out.append(last_b - hi)
    return out


def _valtr_vectors(rng: random.Random, n: int, bound: int) -> Optional[list]:
    xs = sorted(rng.randint(0, bound) for _ in range(n))
    ys = sorted(rng.randint(0, bound) for _ in range(n))
    dxs = _pm_deltas(rng, xs)
    dys = _pm_deltas(rng, ys)
    rng.shuffle(dys)
    vecs = list(zip(dxs, dys))
    for dx, dy in vecs:
        if dx == 0 and dy == 0:
            return None
    import functools

    vecs.sort(key=functools.cmp_to_key(_dir_cmp))
    for a, b in zip(vecs, vecs[1:]):
        if a[0] * b[1] - a[1] * b[0] == 0:
            return None  # duplicate edge direction: reject and regenerate
    return vecs


def _build_from_vectors(vecs) -> Polygon:
    # counterclockwise prefix sums, recentred, then reversed to clockwise
    xs = [0] * len(vecs)
    ys = [0] * len(vecs)
    x = y = 0
    for i, (dx, dy) in enumerate(vecs):
        xs[i] = x
        ys[i] = y
        x += dx
        y += dy
    assert x == 0 and y == 0
    sx = -(min(xs) + max(xs)) // 2
    sy = -(min(ys) + max(ys)) // 2
    pts = [(xs[i] + sx, ys[i] + sy) for i in range(len(vecs) - 1, -1, -1)]
    return validate(pts)


def _upper_half_primitives(m: int, exclude_triple: bool) -> np.ndarray:
    ps = np.arange(-m, m + 1, dtype=np.int32)
    qs = np.arange(0, m + 1, dtype=np.int32)
    P = np.repeat(ps, len(qs))
    Q = np.tile(qs, len(ps))
    mask = (Q > 0) | ((Q == 0) & (P > 0))
    mask &= np.gcd(np.abs(P.astype(np.int64)), Q.astype(np.int64)) == 1
    if exclude_triple:
        for ep, eq in ((1, 0), (-1, 1), (0, 1)):
            mask &= ~((P == ep) & (Q == eq))
    return np.stack([P[mask].astype(np.int64), Q[mask].astype(np.int64)], axis=1)


def _primitive_instance(rng: random.Random, n: int, bound: int) -> Polygon:
    pairs = n // 2
    odd = bool(n & 1)
    m = 2
    while True:
        cand = _upper_half_primitives(m, odd)
        if len(cand) >= max(pairs, 1):
            break
        m = max(m + 1, int(m * 1.3))
        if m > 10 ** 5:
            raise GenerationFailure("could not assemble enough edge directions")
    nprng = np.random.default_rng(rng.getrandbits(64))
    if pairs:
        idx = nprng.choice(len(cand), size=pairs, replace=False)
        dirs = cand[idx]
    else:
        dirs = np.zeros((0, 2), dtype=np.int64)
    for lam_max in (8, 1):
        if lam_max > 1:
            lam = nprng.integers(1, lam_max + 1, size=pairs, dtype=np.int64)
            tri_lam = int(nprng.integers(1, lam_max + 1))
        else:
            lam = np.ones(pairs, dtype=np.int64)
            tri_lam = 1
        parts = [dirs * lam[:, None], -dirs * lam[:, None]]
        if odd:
            parts.append(np.array([(1, 0), (-1, 1), (0, -1)], dtype=np.int64) * tri_lam)
        vecs = np.concatenate(parts)
        ang = np.arctan2(vecs[:, 1].astype(np.float64), vecs[:, 0].astype(np.float64))
        order = np.argsort(ang, kind="stable")
        v = vecs[order]
        xs = np.concatenate([[0], np.cumsum(v[:-1, 0])])
        ys = np.concatenate([[0], np.cumsum(v[:-1, 1])])
        xs -= (int(xs.min()) + int(xs.max())) // 2
        ys -= (int(ys.min()) + int(ys.max())) // 2
        mx = int(np.abs(xs).max())
        my = int(np.abs(ys).max())
        if max(mx, my) > bound or max(mx, my) == 0:
            continue
        sigma = bound // max(mx, my)
        scale = 1 if sigma <= 1 else int(nprng.integers(1, min(sigma, 8) + 1))
        xs *= scale
        ys *= scale
        slack_x = bound - mx * scale
        slack_y = bound - my * scale
        if slack_x > 0:
            xs += int(nprng.integers(-slack_x, slack_x + 1))
        if slack_y > 0:
            ys += int(nprng.integers(-slack_y, slack_y + 1))
        # clockwise orientation: the angular sort above is counterclockwise
        return _polygon_from_int_arrays(xs[::-1].copy(), ys[::-1].copy())
    raise GenerationFailure(f"bound {bound} too small for a strictly convex {n}-gon")
