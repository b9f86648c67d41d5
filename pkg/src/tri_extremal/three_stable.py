"""3-stable inscribed triangles: stability checks, the feasibility-wedge
corners for a vertex pair, seed search, and the rotate-and-kill sweep that
enumerates every 3-stable triangle (and hence the maximum-area triangle).

A corner of an inscribed triangle is stable when no boundary point on the far
side of the opposite side's line is strictly farther from that line; a
triangle is 3-stable when all three corners are stable and sit on polygon
vertices.  All 3-stable triangles pairwise interleave, which is what lets a
two-cursor sweep with one kill per iteration cover them in linear time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Set, Tuple

from . import kernel
from .counters import Counters
from .exact_geom import ExtendedPoint, dist_compare, ray_intersect
from .polygon import Polygon


class NotThreeStableError(ValueError):
    """The seed triple handed to a sweep is not 3-stable."""


class EmptyRightChainError(ValueError):
    """No vertex lies strictly on the right of the directed chord."""


class InternalInvariantError(RuntimeError):
    """An invariant the algorithm guarantees was observed broken (a bug)."""


@dataclass(frozen=True, order=True)
class VertexTriangle:
    """A clockwise vertex index triple in canonical rotation (i smallest)."""

    i: int
    j: int
    k: int

    @classmethod
    def canonical(cls, i: int, j: int, k: int) -> "VertexTriangle":
        m = min(i, j, k)
        if m == j:
            i, j, k = j, k, i
        elif m == k:
            i, j, k = k, i, j
        return cls(i, j, k)

    def indices(self) -> Tuple[int, int, int]:
        return (self.i, self.j, self.k)

    def rotations(self) -> Tuple[Tuple[int, int, int], ...]:
        return ((self.i, self.j, self.k), (self.j, self.k, self.i),
                (self.k, self.i, self.j))


@dataclass(frozen=True)
class QCorners:
    """The four corner points of the wedge region that must contain the third
    corner of a stable triangle over a fixed vertex pair."""

    H: ExtendedPoint
    I: ExtendedPoint
    J: ExtendedPoint
    K: ExtendedPoint


@dataclass(frozen=True)
class TraceRecord:
    b: int
    c: int
    a: int
    decision: str  # "KillB" | "KillC"
    reported: Tuple[Tuple[int, int, int], ...]


@dataclass(frozen=True)
class SweepTrace:
    """Ordered log of one or more sweep runs: cursor positions, kill
    decisions, and the triangles reported at each iteration."""

    records: Tuple[TraceRecord, ...]

    def to_jsonl(self) -> str:
        lines = []
        for r in self.records:
            lines.append(json.dumps({
                "B": r.b, "C": r.c, "A": r.a,
                "decision": r.decision,
                "reported": [list(t) for t in r.reported],
            }, separators=(", ", ": ")))
        return "\n".join(lines) + ("\n" if lines else "")


def triangle_area(p: Polygon, t: VertexTriangle) -> Fraction:
    a = p.point(t.i)
    b = p.point(t.j)
    c = p.point(t.k)
    cr = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return abs(cr) / 2


def farthest_on_right(p: Polygon, j: int, k: int, hint: int) -> Tuple[int, bool]:
    """Clockwise-first vertex of maximum distance to line(v_j, v_k) among the
    vertices strictly right of v_j -> v_k, walking clockwise from `hint`.

    Returns (index, next_tied).  Amortized O(1) when hints chain across a
    monotone sweep.
    """
    n = p.n
    if j == k:
        raise ValueError("chord endpoints coincide")
    if (k + 1) % n == j:
        raise EmptyRightChainError(f"no vertex strictly right of {j}->{k}")
    xs, ys, _ = p.int_coords()
    from ._kernel_py import _cr

    a = hint % n
    cur = abs(_cr(xs, ys, j, k, a))
    while True:
        nxt = (a + 1) % n
        d = abs(_cr(xs, ys, j, k, nxt))
        if d > cur:
            a = nxt
            cur = d
        else:
            break
    if cur == 0:
        raise EmptyRightChainError("hint was not on the right chain")
    tied = abs(_cr(xs, ys, j, k, (a + 1) % n)) == cur and (a + 1) % n != j
    return a, tied


def is_3stable(p: Polygon, t: VertexTriangle) -> bool:
    """Exact 3-stability of a vertex triple (neighbor comparisons; equivalent
    to the definitional check by unimodality of chain distances)."""
    return kernel.stable_triple(p, t.i, t.j, t.k)


def q_corners(p: Polygon, j: int, k: int) -> QCorners:
    """Corner points H, I, J, K of the wedge for the vertex pair (v_j, v_k),
    from pairwise intersections of the four rays spanned by the edges
    adjacent to v_j and v_k (AT_INFINITY where rays do not meet)."""
    if j == k:
        raise ValueError("vertex pair must be distinct")
    n = p.n
    vj = p.point(j)
    vk = p.point(k)
    d_ek1 = p.point(k) - p.point((k - 1) % n)          # direction of e_{k-1}
    d_ek = p.point((k + 1) % n) - p.point(k)           # direction of e_k
    d_ej1 = p.point((j - 1) % n) - p.point(j)          # opposite of e_{j-1}
    d_ej = p.point(j) - p.point((j + 1) % n)           # opposite of e_j
    return QCorners(
        H=ray_intersect(vj, d_ek1, vk, d_ej1),
        I=ray_intersect(vj, d_ek, vk, d_ej),
        J=ray_intersect(vj, d_ek1, vk, d_ej),
        K=ray_intersect(vj, d_ek, vk, d_ej1),
    )


def is_legal(p: Polygon, j: int, k: int) -> bool:
    """A pair is illegal when v_{k+1} is strictly closer than v_k to the line
    through edge e_j, which pushes the wedge outside the polygon."""
    if j == k:
        raise ValueError("vertex pair must be distinct")
    n = p.n
    from .exact_geom import LESS

    return dist_compare(p.point(j), p.point((j + 1) % n),
                        p.point((k + 1) % n), p.point(k)) != LESS


def largest_rooted_triangle(p: Polygon, root: int,
                            counters: Optional[Counters] = None) -> Tuple[int, int]:
    """Indices (b, c) of the largest triangle with one corner pinned at
    `root`; ties take the clockwise-smallest (b, c)."""
    return kernel.step1_largest_rooted(p, root, counters)


def climb(p: Polygon, a: int, b: int, c: int,
          counters: Optional[Counters] = None) -> Tuple[int, int, int]:
    """One climbing pass: advance a once clockwise, then push b and c while
    their clockwise successors are strictly farther from the opposite lines.

    Precondition: b and c are stable in (a, b, c) and a+1 is strictly farther
    than a from line(b, c); the mirrored case runs on the reversed view.
    """
    return kernel.climb_view(p, 1, a, b, c, counters)


def find_one_3stable(p: Polygon, counters: Optional[Counters] = None) -> VertexTriangle:
    """One 3-stable triangle, found by the rooted-maximum start followed by
    climbing passes; deterministic (the root is vertex 0)."""
    r, s, t = kernel.find_one(p, counters)
    return VertexTriangle.canonical(r, s, t)


def _decision_name(code: int) -> str:
    return "KillC" if code == 1 else "KillB"


def rotate_and_kill(p: Polygon, r: int, s: int, t: int,
                    counters: Optional[Counters] = None,
                    want_trace: bool = True) -> Tuple[Set[VertexTriangle], Optional[SweepTrace]]:
    """One rotate-and-kill sweep seeded at the 3-stable triple (v_r, v_s, v_t).

    Pairs (B, C) walk from (v_s, v_t) to (v_t, v_r); every 3-stable triangle
    whose (B, C) edge is processed is reported (the full set needs the union
    over the three cyclic seed rotations, see enumerate_all_3stable).
    """
    if not kernel.stable_triple(p, r, s, t):
        raise NotThreeStableError(f"seed ({r}, {s}, {t}) is not 3-stable")
    reported, trace = kernel.sweep_stable(p, r, s, t, counters, want_trace)
    triangles = {VertexTriangle(*tri) for tri in reported}
    sweep_trace = None
    if want_trace:
        sweep_trace = SweepTrace(tuple(
            TraceRecord(b, c, a, _decision_name(d), tuple(rep))
            for (b, c, a, d, rep) in trace))
    return triangles, sweep_trace


def enumerate_all_3stable(p: Polygon, counters: Optional[Counters] = None,
                          want_trace: bool = False
                          ) -> Tuple[Set[VertexTriangle], Optional[SweepTrace]]:
    """Every 3-stable triangle: one seed, three sweeps (one per cyclic seed
    rotation), results merged by canonical triple."""
    seed = find_one_3stable(p, counters)
    out: Set[VertexTriangle] = set()
    records: List[TraceRecord] = []
    for (r, s, t) in seed.rotations():
        reported, trace = kernel.sweep_stable(p, r, s, t, counters, want_trace)
        out.update(VertexTriangle(*tri) for tri in reported)
        if want_trace:
            records.extend(TraceRecord(b, c, a, _decision_name(d), tuple(rep))
                           for (b, c, a, d, rep) in trace)
    return out, (SweepTrace(tuple(records)) if want_trace else None)


def all_3stable(p: Polygon, counters: Optional[Counters] = None) -> Set[VertexTriangle]:
    return enumerate_all_3stable(p, counters)[0]


def max_area_triangle(p: Polygon, counters: Optional[Counters] = None
                      ) -> Tuple[VertexTriangle, Fraction]:
    """The maximum-area inscribed triangle with its exact area (its corners
    always form a 3-stable triangle); ties return the canonically smallest."""
    triangles = all_3stable(p, counters)
    if not triangles:
        raise InternalInvariantError("no 3-stable triangle found")
    best: Optional[VertexTriangle] = None
    best_area: Optional[Fraction] = None
    for t in sorted(triangles):
        a = triangle_area(p, t)
        if best_area is None or a > best_area:
            best, best_area = t, a
    return best, best_area


def interleaving(n: int, t1: VertexTriangle, t2: VertexTriangle) -> bool:
    """Corners alternate around the boundary: every clockwise arc between
    consecutive corners of one triangle contains a corner of the other
    (arcs include their endpoints)."""

    def covers(a: Tuple[int, int, int], b: Tuple[int, int, int]) -> bool:
        for idx in range(3):
            lo = a[idx]
            hi = a[(idx + 1) % 3]
            width = (hi - lo) % n
            if not any((x - lo) % n <= width for x in b):
                return False
        return True

    return covers(t1.indices(), t2.indices()) and covers(t2.indices(), t1.indices())
