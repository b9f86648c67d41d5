"""Brute-force reference implementations, used only by tests and the verify
command.  Deliberately simple and definitional: they never touch the sweep
code, and size caps guard against accidental hour-long runs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Set, Tuple

from .polygon import Polygon, Unit, unit_from_code
from .three_stable import VertexTriangle, triangle_area

MAX_BRUTE_MAX = 60
MAX_BRUTE_3STABLE = 40
MAX_BRUTE_G3STABLE = 30
MAX_BRUTE_ENCLOSING = 30


class OracleLimitError(ValueError):
    """Instance too large for a brute-force oracle."""


def _check_cap(p: Polygon, cap: int, name: str) -> None:
    if p.n > cap:
        raise OracleLimitError(f"{name} is O(n^3)+; refuses n={p.n} > {cap}")


def _cr(xs, ys, i, j, k):
    return (xs[j] - xs[i]) * (ys[k] - ys[i]) - (ys[j] - ys[i]) * (xs[k] - xs[i])


def corner_stable_definitional(p: Polygon, m: int, a: int, b: int) -> bool:
    """Literal stability of corner v_m against side v_a -> v_b: no vertex
    strictly right of the directed line is strictly farther from it."""
    xs, ys, _ = p.int_coords()
    dm = abs(_cr(xs, ys, a, b, m))
    for v in range(p.n):
        c = _cr(xs, ys, a, b, v)
        if c < 0 and -c > dm:
            return False
    return True


def is_3stable_definitional(p: Polygon, t: VertexTriangle) -> bool:
    i, j, k = t.indices()
    n = p.n
    if len({i, j, k}) != 3:
        return False
    if ((j - i) % n + (k - j) % n + (i - k) % n) != n:
        return False
    return (corner_stable_definitional(p, i, j, k)
            and corner_stable_definitional(p, j, k, i)
            and corner_stable_definitional(p, k, i, j))


def brute_max_triangle(p: Polygon) -> Tuple[VertexTriangle, Fraction]:
    """Exhaustive O(n^3) maximum over clockwise vertex triples; ties return
    the lexicographically smallest canonical triple."""
    _check_cap(p, MAX_BRUTE_MAX, "brute_max_triangle")
    xs, ys, _ = p.int_coords()
    n = p.n
    best = None
    best_a2 = -1
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            for k in range(j + 1, n):
                a2 = abs(_cr(xs, ys, i, j, k))
                if a2 > best_a2:
                    best_a2 = a2
                    best = (i, j, k)
    t = VertexTriangle(*best)
    return t, triangle_area(p, t)


def brute_max_ties(p: Polygon) -> Set[VertexTriangle]:
    _check_cap(p, MAX_BRUTE_MAX, "brute_max_ties")
    xs, ys, _ = p.int_coords()
    n = p.n
    best_a2 = -1
    ties: Set[VertexTriangle] = set()
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            for k in range(j + 1, n):
                a2 = abs(_cr(xs, ys, i, j, k))
                if a2 > best_a2:
                    best_a2 = a2
                    ties = {VertexTriangle(i, j, k)}
                elif a2 == best_a2:
                    ties.add(VertexTriangle(i, j, k))
    return ties


def brute_3stable_set(p: Polygon) -> Set[VertexTriangle]:
    """All clockwise triples passing the literal per-corner stability scan.

    The farthest distance for every directed chord is precomputed by plain
    linear scans; a triple is 3-stable when each corner attains its chord's
    maximum."""
    _check_cap(p, MAX_BRUTE_3STABLE, "brute_3stable_set")
    xs, ys, _ = p.int_coords()
    n = p.n
    # maxdist[a][b]: largest |cross| among vertices strictly right of a->b
    maxdist: List[List[int]] = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            m = 0
            for v in range(n):
                c = _cr(xs, ys, a, b, v)
                if c < 0 and -c > m:
                    m = -c
            maxdist[a][b] = m
    out: Set[VertexTriangle] = set()
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            for k in range(j + 1, n):
                if (-_cr(xs, ys, j, k, i) == maxdist[j][k]
                        and -_cr(xs, ys, k, i, j) == maxdist[k][i]
                        and -_cr(xs, ys, i, j, k) == maxdist[i][j]):
                    out.add(VertexTriangle(i, j, k))
    return out


def brute_dead_pair(p: Polygon, j: int, k: int) -> bool:
    """A vertex pair is dead when no third vertex completes a 3-stable
    clockwise triple on it."""
    n = p.n
    v = (k + 1) % n
    while v != j:
        if is_3stable_definitional(p, VertexTriangle.canonical(v, j, k)):
            return False
        v = (v + 1) % n
    return True


def brute_g3stable_set(p: Polygon):
    """Union of gadget results over every clockwise unit triple."""
    from .general_stable import gadget_g3stable

    _check_cap(p, MAX_BRUTE_G3STABLE, "brute_g3stable_set")
    n = p.n
    out = set()
    codes = range(2 * n)
    for c1 in codes:
        for c2 in codes:
            if (c2 - c1) % (2 * n) == 0:
                continue
            for c3 in codes:
                if (c3 - c1) % (2 * n) == 0 or (c3 - c2) % (2 * n) == 0:
                    continue
                if (c2 - c1) % (2 * n) + (c3 - c2) % (2 * n) + (c1 - c3) % (2 * n) != 2 * n:
                    continue  # not clockwise
                for t in gadget_g3stable(p, unit_from_code(c1, n),
                                         unit_from_code(c2, n),
                                         unit_from_code(c3, n)):
                    out.add(t)
    return out


def brute_gdead_pair(p: Polygon, u1: Unit, u2: Unit) -> bool:
    """A unit pair is G-dead when no generally 3-stable triangle has its
    second corner in u1 and third corner in u2."""
    from .general_stable import gadget_g3stable

    n = p.n
    c1 = u1.code()
    c2 = u2.code()
    for c3 in range(2 * n):
        if (c3 - c1) % (2 * n) == 0 or (c3 - c2) % (2 * n) == 0:
            continue
        if (c1 - c3) % (2 * n) + (c2 - c1) % (2 * n) + (c3 - c2) % (2 * n) != 2 * n:
            continue  # need clockwise (u3, u1, u2)
        if gadget_g3stable(p, unit_from_code(c3, n), u1, u2):
            return False
    return True


def brute_min_enclosing(p: Polygon):
    """Minimum-area enclosing triangle over anticomplementary images of the
    brute generally-3-stable set, filtered by containment."""
    from .enclosing import NoCandidateError, anticomplementary_of, contains

    _check_cap(p, MAX_BRUTE_ENCLOSING, "brute_min_enclosing")
    best = None
    for g in brute_g3stable_set(p):
        tri = anticomplementary_of(g)
        if tri is None:
            continue
        if not contains(p, tri.a, tri.b, tri.c):
            continue
        if best is None or tri.area < best.area:
            best = tri
    if best is None:
        raise NoCandidateError("no enclosing candidate; implementation bug")
    return best
