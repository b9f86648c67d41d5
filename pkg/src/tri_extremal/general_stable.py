"""Generally 3-stable triangles: corners may sit anywhere on the boundary
(vertices or open edges), with representatives chosen for the equivalence
classes that have exactly two vertex corners.

The pipeline: a generalized rotate-and-kill sweep walks unit pairs (vertex or
edge) and annotates each visited pair with the farthest-vertex range of its
chord; a constant-time construction gadget then builds the unique candidate
triangle for every (unit, pair) combination inside those ranges, batching the
edge-pair scans through disjoint stripe regions so the total unit-cursor
travel stays linear.

All constructions run in integer homogeneous coordinates on the denominator-
cleared polygon; exact rational corner coordinates are produced only for
accepted triangles.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Set, Tuple

from . import kernel
from .counters import Counters
from .exact_geom import Point
from .polygon import Polygon, Unit, unit_from_code
from .three_stable import NotThreeStableError, VertexTriangle, find_one_3stable


@dataclass(frozen=True)
class GTriangle:
    """A generally 3-stable triangle: three (carrying unit, exact corner)
    pairs in clockwise order, canonically rotated, plus the exact area."""

    corners: Tuple[Tuple[Unit, Point], Tuple[Unit, Point], Tuple[Unit, Point]]
    area: Fraction

    def units(self) -> Tuple[Unit, Unit, Unit]:
        return tuple(u for u, _ in self.corners)

    def points(self) -> Tuple[Point, Point, Point]:
        return tuple(pt for _, pt in self.corners)

    def vertex_corner_count(self) -> int:
        return sum(1 for u, _ in self.corners if u.is_vertex)

    def is_vertex_triangle(self) -> bool:
        return self.vertex_corner_count() == 3

    def as_vertex_triangle(self) -> Optional[VertexTriangle]:
        if not self.is_vertex_triangle():
            return None
        return VertexTriangle.canonical(*(u.index for u, _ in self.corners))


@dataclass(frozen=True)
class VisitRecord:
    """One visited unit pair with its farthest-vertex annotations."""

    pair: Tuple[Unit, Unit]
    a_first: int
    a_last: int
    rotation: int


def edge_param(p: Polygon, edge_index: int, pt: Point) -> Fraction:
    """Parameter t of a point on edge e_m: pt = v_m + t * (v_{m+1} - v_m)."""
    n = p.n
    a = p.point(edge_index)
    b = p.point((edge_index + 1) % n)
    if b.x != a.x:
        return (pt.x - a.x) / (b.x - a.x)
    return (pt.y - a.y) / (b.y - a.y)


def boundary_position(p: Polygon, unit: Unit, pt: Point) -> Fraction:
    """Total order of a boundary point in the unit cycle: code + edge offset."""
    if unit.is_vertex:
        return Fraction(unit.code())
    return Fraction(unit.code()) + edge_param(p, unit.index, pt)


def g_interleaving(p: Polygon, g1: GTriangle, g2: GTriangle) -> bool:
    """Interleaving generalized to boundary points: every clockwise arc
    between consecutive corners of one triangle (endpoints included) holds a
    corner of the other."""
    period = Fraction(2 * p.n)
    k1 = [boundary_position(p, u, pt) for u, pt in g1.corners]
    k2 = [boundary_position(p, u, pt) for u, pt in g2.corners]

    def covers(a: List[Fraction], b: List[Fraction]) -> bool:
        for idx in range(3):
            lo = a[idx]
            width = (a[(idx + 1) % 3] - lo) % period
            if not any((x - lo) % period <= width for x in b):
                return False
        return True

    return covers(k1, k2) and covers(k2, k1)


# ---------------------------------------------------------------------------
# Integer homogeneous construction gadget
# ---------------------------------------------------------------------------
#
# Candidate corners are (px, py, w) integer triples with w > 0 describing the
# exact point (px/w, py/w) in the denominator-cleared coordinate frame.


def _norm(pt):
    px, py, w = pt
    if w < 0:
        return (-px, -py, -w)
    return pt


def _line_through(xs, ys, a, b):
    la = ys[b] - ys[a]
    lb = xs[a] - xs[b]
    return la, lb, -(la * xs[a] + lb * ys[a])


def _line_point_dir(px, py, dx, dy):
    return dy, -dx, -(dy * px - dx * py)


def _line_inter(l1, l2):
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    return _norm((b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2))


def _mid(p1, p2):
    x1, y1, w1 = p1
    x2, y2, w2 = p2
    return _norm((x1 * w2 + x2 * w1, y1 * w2 + y2 * w1, 2 * w1 * w2))


def _same_point(p1, p2):
    return p1[0] * p2[2] == p2[0] * p1[2] and p1[1] * p2[2] == p2[1] * p1[2]


def _side_dir(y_pt, z_pt):
    # direction from Y to Z, scaled by the positive factor wY * wZ
    yx, yy, yw = y_pt
    zx, zy, zw = z_pt
    return (zx * yw - yx * zw, zy * yw - yy * zw)


def _edge_dir(xs, ys, n, m):
    m1 = m + 1 if m + 1 < n else 0
    return xs[m1] - xs[m], ys[m1] - ys[m]


def _in_open_edge(xs, ys, n, m, pt):
    px, py, w = pt
    dx, dy = _edge_dir(xs, ys, n, m)
    if dx * (py - w * ys[m]) - dy * (px - w * xs[m]) != 0:
        return False
    if dx != 0:
        num = px - w * xs[m]
        den = w * dx
    else:
        num = py - w * ys[m]
        den = w * dy
    if den < 0:
        num, den = -num, -den
    return 0 < num < den


class _Candidate:
    """A constructed corner triple awaiting a stability verdict."""

    __slots__ = ("codes", "pts")

    def __init__(self, codes, pts):
        self.codes = codes          # clockwise unit codes
        self.pts = [_norm(p) for p in pts]


def _construct(xs, ys, n, c1, c2, c3) -> List[_Candidate]:
    """Build the unique candidate triangle(s) for a clockwise unit-code
    triple, by signature.  Purely constructive: stability is not checked."""
    kinds = (c1 & 1, c2 & 1, c3 & 1)
    edges = sum(kinds)
    if edges == 0:
        i, j, k = c1 >> 1, c2 >> 1, c3 >> 1
        return [_Candidate((c1, c2, c3),
                           [(xs[i], ys[i], 1), (xs[j], ys[j], 1), (xs[k], ys[k], 1)])]
    if edges == 3:
        return _construct_eee(xs, ys, n, c1, c2, c3)
    # rotate so the signature starts at a fixed position
    codes = (c1, c2, c3)
    if edges == 1:
        while not (codes[0] & 1):
            codes = (codes[1], codes[2], codes[0])
        return _construct_evv(xs, ys, n, *codes)
    while codes[0] & 1:
        codes = (codes[1], codes[2], codes[0])
    return _construct_vee(xs, ys, n, *codes)


def _construct_eee(xs, ys, n, c1, c2, c3) -> List[_Candidate]:
    i, j, k = c1 >> 1, c2 >> 1, c3 >> 1
    li = _line_through(xs, ys, i, (i + 1) % n)
    lj = _line_through(xs, ys, j, (j + 1) % n)
    lk = _line_through(xs, ys, k, (k + 1) % n)
    i1 = _line_inter(li, lj)
    i2 = _line_inter(lj, lk)
    i3 = _line_inter(lk, li)
    if i1[2] == 0 or i2[2] == 0 or i3[2] == 0:
        return []
    return [_Candidate((c1, c2, c3), [_mid(i1, i3), _mid(i1, i2), _mid(i2, i3)])]


def _construct_vee(xs, ys, n, cv, ce1, ce2) -> List[_Candidate]:
    # corners: A = vertex, B in first edge, C in second edge; A-B parallel to
    # the second edge and A-C parallel to the first (forced by stability)
    i = cv >> 1
    j = ce1 >> 1
    k = ce2 >> 1
    dj = _edge_dir(xs, ys, n, j)
    dk = _edge_dir(xs, ys, n, k)
    lb = _line_inter(_line_point_dir(xs[i], ys[i], *dk),
                     _line_through(xs, ys, j, (j + 1) % n))
    lc = _line_inter(_line_point_dir(xs[i], ys[i], *dj),
                     _line_through(xs, ys, k, (k + 1) % n))
    if lb[2] == 0 or lc[2] == 0:
        return []
    return [_Candidate((cv, ce1, ce2), [(xs[i], ys[i], 1), lb, lc])]


def _construct_evv(xs, ys, n, ce, cv1, cv2) -> List[_Candidate]:
    """Two-vertex-corner class: the edge corner must see a chord parallel to
    its edge and may slide inside the intersection of the edge with the
    feasibility wedge; the representatives are that segment's endpoints."""
    i = ce >> 1
    j = cv1 >> 1
    k = cv2 >> 1
    di = _edge_dir(xs, ys, n, i)
    chx = xs[k] - xs[j]
    chy = ys[k] - ys[j]
    if di[0] * chy - di[1] * chx != 0:
        return []  # chord not parallel to the carrying edge
    jm = j - 1 if j > 0 else n - 1
    km = k - 1 if k > 0 else n - 1
    dj = _edge_dir(xs, ys, n, j)
    djm = _edge_dir(xs, ys, n, jm)
    dk = _edge_dir(xs, ys, n, k)
    dkm = _edge_dir(xs, ys, n, km)
    # clip x(t) = v_i + t*d_i against the wedge of the vertex pair (j, k):
    # each condition is alpha + beta*t (>= 0 after sense folding)
    conds = []
    for (ox, oy), (dx, dy), sense in (
            ((xs[j], ys[j]), dk, -1),    # third-corner wedge at v_j, far ray
            ((xs[j], ys[j]), dkm, 1),    # near ray
            ((xs[k], ys[k]), dj, 1),     # wedge at v_k
            ((xs[k], ys[k]), djm, -1)):
        alpha = (xs[i] - ox) * dy - (ys[i] - oy) * dx
        beta = di[0] * dy - di[1] * dx
        if sense < 0:
            alpha, beta = -alpha, -beta
        conds.append((alpha, beta))
    lo_n, lo_d = 0, 1
    hi_n, hi_d = 1, 1
    for alpha, beta in conds:
        if beta == 0:
            if alpha < 0:
                return []
        elif beta > 0:
            if -alpha * lo_d > lo_n * beta:
                lo_n, lo_d = -alpha, beta
        else:
            if alpha * hi_d < hi_n * (-beta):
                hi_n, hi_d = alpha, -beta
    if lo_n * hi_d > hi_n * lo_d:
        return []
    out = []
    reps = [(lo_n, lo_d)]
    if lo_n * hi_d != hi_n * lo_d:
        reps.append((hi_n, hi_d))
    for num, den in reps:
        if not (0 < num < den):
            continue  # representative must sit strictly inside the open edge
        pt = (xs[i] * den + num * di[0], ys[i] * den + num * di[1], den)
        out.append(_Candidate((ce, cv1, cv2),
                              [pt, (xs[j], ys[j], 1), (xs[k], ys[k], 1)]))
    return out


def _clockwise_pts(p1, p2, p3):
    ax, ay, aw = p1
    bx, by, bw = p2
    cx, cy, cw = p3
    ux = bx * aw - ax * bw
    uy = by * aw - ay * bw
    vx = cx * aw - ax * cw
    vy = cy * aw - ay * cw
    return (ux * vy - uy * vx) * bw * cw < 0


def _corner_conditions(xs, ys, n, cand, local: bool) -> bool:
    """Verify all three corners are stable and lie in their open units.

    local=True uses the neighbor-edge sign conditions (O(1), valid by
    unimodality of chain distances); local=False scans every vertex
    (the definitional check, used by the oracle-facing gadget)."""
    pts = cand.pts
    if _same_point(pts[0], pts[1]) or _same_point(pts[1], pts[2]) \
            or _same_point(pts[0], pts[2]):
        return False
    if not _clockwise_pts(*pts):
        return False
    for idx in range(3):
        code = cand.codes[idx]
        corner = pts[idx]
        y_pt = pts[(idx + 1) % 3]
        z_pt = pts[(idx + 2) % 3]
        dx, dy = _side_dir(y_pt, z_pt)
        m = code >> 1
        if code & 1:
            if not _in_open_edge(xs, ys, n, m, corner):
                return False
            em = _edge_dir(xs, ys, n, m)
            if dx * em[1] - dy * em[0] != 0:
                return False  # an edge-interior corner needs a parallel side
            lead = (m + 1) % n
        else:
            if not (corner[0] == xs[m] * corner[2] and corner[1] == ys[m] * corner[2]):
                return False
            lead = m
        trail = (m - 1) if m > 0 else n - 1
        dl = _edge_dir(xs, ys, n, lead)
        dt = _edge_dir(xs, ys, n, trail)
        if dx * dl[1] - dy * dl[0] < 0:
            return False
        if dx * dt[1] - dy * dt[0] > 0:
            return False
        if not local:
            if not _global_max(xs, ys, n, corner, y_pt, z_pt):
                return False
    return True


def _global_max(xs, ys, n, corner, y_pt, z_pt) -> bool:
    """Definitional stability: no vertex strictly right of the side Y->Z is
    strictly farther from its line than the corner."""
    yx, yy, yw = y_pt
    dx, dy = _side_dir(y_pt, z_pt)
    cx, cy, cw = corner
    cc = dx * (cy * yw - yy * cw) - dy * (cx * yw - yx * cw)
    for v in range(n):
        cv = dx * (ys[v] * yw - yy) - dy * (xs[v] * yw - yx)
        if cv < 0 and cv * cw < cc:
            return False
    return True


def _emit(p: Polygon, scale: int, cand: _Candidate) -> GTriangle:
    n = p.n
    corners = []
    for code, (px, py, w) in zip(cand.codes, cand.pts):
        den = w * scale
        pt = Point(Fraction(px, den), Fraction(py, den))
        corners.append((unit_from_code(code, n), pt))
    # canonical rotation: smallest boundary position first
    keys = []
    for unit, pt in corners:
        t = Fraction(0) if unit.is_vertex else edge_param(p, unit.index, pt)
        keys.append(Fraction(unit.code()) + t)
    start = keys.index(min(keys))
    corners = corners[start:] + corners[:start]
    a, b, c = (pt for _, pt in corners)
    area = abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)) / 2
    return GTriangle(tuple(corners), area)


def _cyclic_triple(two_n, c1, c2, c3) -> bool:
    if (c2 - c1) % two_n == 0 or (c3 - c2) % two_n == 0 or (c1 - c3) % two_n == 0:
        return False
    return (c2 - c1) % two_n + (c3 - c2) % two_n + (c1 - c3) % two_n == two_n


def gadget_g3stable(p: Polygon, u1: Unit, u2: Unit, u3: Unit) -> List[GTriangle]:
    """Construct and definitionally verify the candidate generally 3-stable
    triangle(s) with corners carried by the clockwise units (u1, u2, u3).

    Returns the accepted triangles (up to two for a two-vertex-corner class
    with a nondegenerate representative segment), or an empty list."""
    n = p.n
    c1, c2, c3 = u1.code(), u2.code(), u3.code()
    if not _cyclic_triple(2 * n, c1, c2, c3):
        raise ValueError(f"units must be distinct and clockwise: {u1} {u2} {u3}")
    xs, ys, scale = p.int_coords()
    out = []
    for cand in _construct(xs, ys, n, c1, c2, c3):
        if _corner_conditions(xs, ys, n, cand, local=False):
            out.append(_emit(p, scale, cand))
    return out


def _gadget_fast(p, xs, ys, n, scale, c1, c2, c3, out: Dict) -> None:
    if not _cyclic_triple(2 * n, c1, c2, c3):
        return
    for cand in _construct(xs, ys, n, c1, c2, c3):
        if _corner_conditions(xs, ys, n, cand, local=True):
            g = _emit(p, scale, cand)
            out[g] = g


# ---------------------------------------------------------------------------
# Sweep drivers
# ---------------------------------------------------------------------------

def generalized_rotate_and_kill(p: Polygon, r: int, s: int, t: int,
                                counters: Optional[Counters] = None,
                                rotation: int = 0) -> List[VisitRecord]:
    """One generalized sweep run, from (v_s, v_t) to (v_t, v_r) inclusive."""
    if not kernel.stable_triple(p, r, s, t):
        raise NotThreeStableError(f"seed ({r}, {s}, {t}) is not 3-stable")
    u1s, u2s, firsts, lasts = kernel.sweep_general(p, r, s, t, counters)
    n = p.n
    return [VisitRecord((unit_from_code(int(u1s[i]), n), unit_from_code(int(u2s[i]), n)),
                        int(firsts[i]), int(lasts[i]), rotation)
            for i in range(len(u1s))]


def _chain_pos(n, k, v):
    return (v - k) % n


def _merge_annotations(n, runs) -> Dict[Tuple[int, int], Tuple[int, int]]:
    """Boundary pairs are visited by two rotations (one's terminal pair is the
    next one's initial pair); merge their farthest ranges."""
    merged: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for u1s, u2s, firsts, lasts in runs:
        for idx in (0, len(u1s) - 1):
            key = (int(u1s[idx]), int(u2s[idx]))
            k = ((key[1] + 1) >> 1) % n
            af, al = int(firsts[idx]), int(lasts[idx])
            if key in merged:
                bf, bl = merged[key]
                af = af if _chain_pos(n, k, af) <= _chain_pos(n, k, bf) else bf
                al = al if _chain_pos(n, k, al) >= _chain_pos(n, k, bl) else bl
            merged[key] = (af, al)
    return merged


def collect_visit_pairs(p: Polygon,
                        counters: Optional[Counters] = None) -> List[VisitRecord]:
    """Visited unit pairs of all three seeded rotations, in path order, with
    duplicate boundary pairs merged into single annotated records."""
    seed = find_one_3stable(p, counters)
    runs = [kernel.sweep_general(p, r, s, t, counters)
            for (r, s, t) in seed.rotations()]
    merged = _merge_annotations(p.n, runs)
    seen: Set[Tuple[int, int]] = set()
    out: List[VisitRecord] = []
    n = p.n
    for rot, (u1s, u2s, firsts, lasts) in enumerate(runs):
        for i in range(len(u1s)):
            key = (int(u1s[i]), int(u2s[i]))
            if key in seen:
                continue
            seen.add(key)
            af, al = merged.get(key, (int(firsts[i]), int(lasts[i])))
            out.append(VisitRecord((unit_from_code(key[0], n),
                                    unit_from_code(key[1], n)), af, al, rot))
    return out


def enumerate_g3stable(p: Polygon,
                       counters: Optional[Counters] = None) -> Set[GTriangle]:
    """The exact set of generally 3-stable triangles (with representatives for
    the two-vertex-corner classes), computed by the three sweeps plus the
    batched constant-time gadget scans."""
    if counters is None:
        counters = Counters()
    n = p.n
    xs, ys, scale = p.int_coords()
    seed = find_one_3stable(p, counters)
    runs = [kernel.sweep_general(p, r, s, t, counters)
            for (r, s, t) in seed.rotations()]
    merged = _merge_annotations(n, runs)
    seen: Set[Tuple[int, int]] = set()
    out: Dict[GTriangle, GTriangle] = {}
    for u1s, u2s, firsts, lasts in runs:
        _scan_rotation(p, xs, ys, n, scale, u1s, u2s, firsts, lasts,
                       merged, seen, out, counters)
    return set(out.values())


def _scan_rotation(p, xs, ys, n, scale, u1s, u2s, firsts, lasts,
                   merged, seen, out, counters) -> None:
    two_n = 2 * n
    run_items: List[Tuple[int, int, int, int]] = []  # (u1, u2, af, al)
    run_kind = 0  # 0 undecided, 1 row (shared u1), 2 column (shared u2)

    def flush():
        nonlocal run_items, run_kind
        if run_items:
            _scan_edge_run(p, xs, ys, n, scale, run_kind, run_items, out, counters)
        run_items = []
        run_kind = 0

    for i in range(len(u1s)):
        u1 = int(u1s[i])
        u2 = int(u2s[i])
        kind1 = u1 & 1
        kind2 = u2 & 1
        if kind1 != kind2:
            continue  # mixed pairs never carry an edge of an accepted triangle
        key = (u1, u2)
        if key in seen:
            continue
        seen.add(key)
        af, al = merged.get(key, (int(firsts[i]), int(lasts[i])))
        if kind1 == 0:
            flush()
            span = (al - af) % n
            code = 2 * af
            for step in range(2 * span + 1):
                counters.bump(ca=1 if step else 0)
                _gadget_fast(p, xs, ys, n, scale, code, u1, u2, out)
                counters.gadget_calls += 1
                code = code + 1 if code + 1 < two_n else 0
        else:
            if run_items:
                if run_kind == 0:
                    if run_items[0][0] == u1:
                        run_kind = 1
                    elif run_items[0][1] == u2:
                        run_kind = 2
                    else:
                        flush()
                elif (run_kind == 1 and run_items[0][0] != u1) or \
                        (run_kind == 2 and run_items[0][1] != u2):
                    flush()
            run_items.append((u1, u2, af, al))
    flush()


def _scan_edge_run(p, xs, ys, n, scale, run_kind, items, out, counters) -> None:
    """Scan the units for a maximal run of visited edge pairs sharing one
    edge, pruned by the disjoint stripe regions each partner edge cuts out of
    the fixed edge's parallel strip family."""
    two_n = 2 * n
    if run_kind == 0:
        run_kind = 1  # singleton run: treat as a row
    fixed = items[0][0] if run_kind == 1 else items[0][1]
    eref = fixed >> 1
    dx, dy = _edge_dir(xs, ys, n, eref)
    x0, y0 = xs[eref], ys[eref]

    def off(v):
        return dx * (ys[v] - y0) - dy * (xs[v] - x0)

    span_start = 2 * items[0][2]
    span_len = (2 * items[-1][3] - span_start) % two_n
    stripes = []
    ok = True
    for (u1, u2, af, al) in items:
        wpos = (2 * af - span_start) % two_n
        wend = (2 * al - span_start) % two_n
        if wpos > wend or wend > span_len:
            ok = False
            break
        other = (u2 if run_kind == 1 else u1) >> 1
        o1 = off(other)
        o2 = off((other + 1) % n)
        lo, hi = (o1, o2) if o1 <= o2 else (o2, o1)
        if lo == hi:
            continue  # parallel partner edge: empty stripe, nothing to scan
        stripes.append((lo, hi, u1, u2, wpos, wend))
    if not ok:
        # fall back to direct per-pair window scans (always correct)
        for (u1, u2, af, al) in items:
            span = (al - af) % n
            code = 2 * af
            for step in range(2 * span + 1):
                counters.bump_batch(1 if step else 0)
                _gadget_fast(p, xs, ys, n, scale, code, u1, u2, out)
                counters.gadget_calls += 1
                code = code + 1 if code + 1 < two_n else 0
        return
    if not stripes:
        return
    stripes.sort(key=lambda srec: (srec[0], srec[1]))
    los = [srec[0] for srec in stripes]
    his = [srec[1] for srec in stripes]
    code = span_start
    for pos in range(span_len + 1):
        counters.bump_batch(1 if pos else 0)
        if code & 1:
            m = code >> 1
            oa = off(m)
            ob = off((m + 1) % n)
            ulo, uhi = (oa, ob) if oa <= ob else (ob, oa)
        else:
            ulo = uhi = off(code >> 1)
        idx = bisect_right(los, uhi) - 1
        while idx >= 0 and his[idx] > ulo:
            lo, hi, u1, u2, wpos, wend = stripes[idx]
            if lo < uhi and wpos <= pos <= wend:
                _gadget_fast(p, xs, ys, n, scale, code, u1, u2, out)
                counters.gadget_calls += 1
            idx -= 1
        code = code + 1 if code + 1 < two_n else 0
