"""Pure Python sweep kernels on integer coordinates.

All functions take parallel coordinate sequences xs, ys of a strictly convex
clockwise polygon whose coordinates are plain Python ints (rational inputs are
scaled to integers by the caller; every predicate is invariant under that
uniform scaling).  The compiled kernel in _kernel_c.pyx mirrors this module
statement for statement so that results and counters match exactly.

Counter convention: pe counts exact geometric comparisons, ca counts cursor
advances.  Functions return them alongside their results.
"""

from __future__ import annotations


def _cr(xs, ys, i, j, k):
    # cross(v_j - v_i, v_k - v_i)
    return (xs[j] - xs[i]) * (ys[k] - ys[i]) - (ys[j] - ys[i]) * (xs[k] - xs[i])


def validate_convex(xs, ys):
    """Check strict convexity of a closed vertex cycle.

    Returns (status, index): 0 ok clockwise, 1 ok counterclockwise,
    2 collinear triple at index, 3 reflex/mixed turn at index,
    4 winding count != 1, 5 duplicate adjacent vertex at index.
    """
    n = len(xs)
    sigma = 0
    transitions = 0
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        k = j + 1 if j + 1 < n else 0
        d1x = xs[j] - xs[i]
        d1y = ys[j] - ys[i]
        if d1x == 0 and d1y == 0:
            return 5, i
        c = d1x * (ys[k] - ys[j]) - d1y * (xs[k] - xs[j])
        if c == 0:
            return 2, i
        s = 1 if c > 0 else -1
        if sigma == 0:
            sigma = s
        elif s != sigma:
            return 3, i
        d2x = xs[k] - xs[j]
        d2y = ys[k] - ys[j]
        h1 = 0 if (d1y > 0 or (d1y == 0 and d1x > 0)) else 1
        h2 = 0 if (d2y > 0 or (d2y == 0 and d2x > 0)) else 1
        if h1 != h2:
            transitions += 1
    if transitions != 2:
        return 4, 0
    return (0 if sigma == -1 else 1), 0


def step1_largest_rooted(xs, ys, root):
    """Largest-area triangle rooted at `root`: returns (b, c, pe, ca).

    Enumerates b clockwise while maintaining the farthest vertex c from
    line(root, b) with a monotone cursor; ties take the first (b, c) in
    clockwise order.
    """
    n = len(xs)
    pe = 0
    ca = 0
    best_b = (root + 1) % n
    best_c = (root + 2) % n
    best_area2 = -1
    c = 2
    # work in offsets from root so the chain b+1..n-1 needs no wrap handling
    for b_off in range(1, n - 1):
        b = (root + b_off) % n
        if c <= b_off:
            c = b_off + 1
            ca += 1
        cur = abs(_cr(xs, ys, root, b, (root + c) % n))
        while c + 1 < n:
            pe += 1
            nxt = abs(_cr(xs, ys, root, b, (root + c + 1) % n))
            if nxt > cur:
                c += 1
                ca += 1
                cur = nxt
            else:
                break
        pe += 1
        if cur > best_area2:
            best_area2 = cur
            best_b = b
            best_c = (root + c) % n
    return best_b, best_c, pe, ca


def climb_view(xs, ys, n, d, a, b, c):
    """One climbing pass: advance a once, then push b and c to the local
    fixed point.  d=+1 walks clockwise; d=-1 runs the mirrored case with the
    roles of the second and third corner swapped by the caller."""
    pe = 0
    ca = 0
    a = (a + d) % n
    ca += 1
    moved = True
    while moved:
        moved = False
        while True:
            pe += 1
            nb = (b + d) % n
            if abs(_cr(xs, ys, a, c, nb)) > abs(_cr(xs, ys, a, c, b)):
                b = nb
                ca += 1
                moved = True
            else:
                break
        while True:
            pe += 1
            nc = (c + d) % n
            if abs(_cr(xs, ys, a, b, nc)) > abs(_cr(xs, ys, a, b, c)):
                c = nc
                ca += 1
                moved = True
            else:
                break
    return a, b, c, pe, ca


def _corner_ok(xs, ys, n, m, p, q):
    """Neighbor test: corner m is at maximal distance to line(p, q) among the
    vertices on its side.  Valid because vertex distance along the chain is
    unimodal and the chord endpoints (distance 0) block the walk."""
    dm = abs(_cr(xs, ys, p, q, m))
    prv = m - 1 if m > 0 else n - 1
    nxt = m + 1 if m + 1 < n else 0
    return dm >= abs(_cr(xs, ys, p, q, prv)) and dm >= abs(_cr(xs, ys, p, q, nxt))


def _cyclic_clockwise(n, i, j, k):
    return (j - i) % n + (k - j) % n + (i - k) % n == n


def stable_triple(xs, ys, i, j, k):
    """Neighbor-based 3-stability of the clockwise vertex triple (i, j, k).

    Returns (ok, pe)."""
    n = len(xs)
    if i == j or j == k or i == k or not _cyclic_clockwise(n, i, j, k):
        return False, 0
    pe = 2
    if not _corner_ok(xs, ys, n, i, j, k):
        return False, pe
    pe += 2
    if not _corner_ok(xs, ys, n, j, k, i):
        return False, pe
    pe += 2
    if not _corner_ok(xs, ys, n, k, i, j):
        return False, pe
    return True, pe


def find_one(xs, ys):
    """Locate one 3-stable triple: returns (r, s, t, pe, ca), clockwise.

    Starts from the largest triangle rooted at vertex 0 and repeatedly climbs
    in the direction of improvement until the moving corner is stable; the
    mirrored direction reuses the same climbing body with swapped corner
    roles."""
    n = len(xs)
    if n == 3:
        return 0, 1, 2, 0, 0
    b0, c0, pe, ca = step1_largest_rooted(xs, ys, 0)
    a = 0
    pe += 2
    if _corner_ok(xs, ys, n, a, b0, c0):
        return _canon3(n, a, b0, c0) + (pe, ca)
    # pick the climbing direction: the strictly farther neighbor exists
    pe += 1
    da = abs(_cr(xs, ys, b0, c0, a))
    if abs(_cr(xs, ys, b0, c0, (a + 1) % n)) > da:
        d = 1
        b, c = b0, c0
    else:
        d = -1
        b, c = c0, b0  # mirrored view swaps the roles of the two fixed corners
    while True:
        a, b, c, pe1, ca1 = climb_view(xs, ys, n, d, a, b, c)
        pe += pe1
        ca += ca1
        pe += 2
        if _corner_ok(xs, ys, n, a, b, c):
            break
        pe += 1
        if not abs(_cr(xs, ys, b, c, (a + d) % n)) > abs(_cr(xs, ys, b, c, a)):
            raise RuntimeError("climb invariant violated: no improving neighbor")
    if d == 1:
        i, j, k = a, b, c
    else:
        i, j, k = a, c, b
    return _canon3(n, i, j, k) + (pe, ca)


def _canon3(n, i, j, k):
    m = min(i, j, k)
    if m == i:
        return i, j, k
    if m == j:
        return j, k, i
    return k, i, j


def _cmp_corner(xs, ys, j, k, a, d1x, d1y, o2, d2x, d2y):
    """Compare dist(a, line(j,k)) with the distance of the ray intersection
    (origin v_j, direction d1) x (origin v_o2, direction d2).

    Returns -1/0/+1; a missing intersection counts as infinitely far (-1).
    """
    w = d1x * d2y - d1y * d2x
    if w == 0:
        return -1
    ox = xs[o2] - xs[j]
    oy = ys[o2] - ys[j]
    tn = ox * d2y - oy * d2x
    sn = ox * d1y - oy * d1x
    if w > 0:
        if tn < 0 or sn < 0:
            return -1
    else:
        if tn > 0 or sn > 0:
            return -1
    lhs = abs(_cr(xs, ys, j, k, a)) * abs(w)
    rhs = abs(tn) * abs((xs[k] - xs[j]) * d1y - (ys[k] - ys[j]) * d1x)
    if lhs < rhs:
        return -1
    if lhs > rhs:
        return 1
    return 0


def _cmp_corner_kind(xs, ys, n, j, k, a, kind):
    """kind: 0=I (vv), 1=H (ee), 2=J (ve), 3=K (ev); see the wedge corners."""
    jp = j + 1 if j + 1 < n else 0
    jm = j - 1 if j > 0 else n - 1
    kp = k + 1 if k + 1 < n else 0
    km = k - 1 if k > 0 else n - 1
    if kind == 0:  # I: ray(v_j, dir e_k) x ray(v_k, -dir e_j)
        return _cmp_corner(xs, ys, j, k, a,
                           xs[kp] - xs[k], ys[kp] - ys[k],
                           k, xs[j] - xs[jp], ys[j] - ys[jp])
    if kind == 1:  # H: ray(v_j, dir e_{k-1}) x ray(v_k, -dir e_{j-1})
        return _cmp_corner(xs, ys, j, k, a,
                           xs[k] - xs[km], ys[k] - ys[km],
                           k, xs[jm] - xs[j], ys[jm] - ys[j])
    if kind == 2:  # J: ray(v_j, dir e_{k-1}) x ray(v_k, -dir e_j)
        return _cmp_corner(xs, ys, j, k, a,
                           xs[k] - xs[km], ys[k] - ys[km],
                           k, xs[j] - xs[jp], ys[j] - ys[jp])
    # K: ray(v_j, dir e_k) x ray(v_k, -dir e_{j-1})
    return _cmp_corner(xs, ys, j, k, a,
                       xs[kp] - xs[k], ys[kp] - ys[k],
                       k, xs[jm] - xs[j], ys[jm] - ys[j])


def sweep_stable(xs, ys, r, s, t, want_trace):
    """Rotate-and-kill sweep for 3-stable triangles seeded at (r, s, t).

    Walks (B, C) from (v_s, v_t) to (v_t, v_r), keeping A at the farthest
    vertex on the right of B->C, reporting the stable triples among
    {A, A+1} x (B, C), and killing B or C depending on whether A stays within
    the feasibility wedge corner.  Returns (reported, pe, ca, trace) where
    trace is None or a list of (B, C, A, decision, reported_here) rows and
    decision is 0 for a B kill, 1 for a C kill.
    """
    n = len(xs)
    pe = 0
    ca = 0
    B, C, A = s, t, r
    reported = []
    trace = [] if want_trace else None
    while True:
        cur = abs(_cr(xs, ys, B, C, A))
        while True:
            pe += 1
            nA = A + 1 if A + 1 < n else 0
            nxt = abs(_cr(xs, ys, B, C, nA))
            if nxt > cur:
                A = nA
                cur = nxt
                ca += 1
            else:
                break
        here = []
        ok, pe1 = stable_triple(xs, ys, A, B, C)
        pe += pe1
        if ok:
            here.append(_canon3(n, A, B, C))
        A1 = A + 1 if A + 1 < n else 0
        ok, pe1 = stable_triple(xs, ys, A1, B, C)
        pe += pe1
        if ok:
            here.append(_canon3(n, A1, B, C))
        reported.extend(here)
        pe += 1
        if _cmp_corner_kind(xs, ys, n, B, C, A, 0) > 0:
            decision = 1
            if want_trace:
                trace.append((B, C, A, decision, here))
            C = C + 1 if C + 1 < n else 0
        else:
            decision = 0
            if want_trace:
                trace.append((B, C, A, decision, here))
            B = B + 1 if B + 1 < n else 0
        ca += 1
        if B == t and C == r:
            break
    return reported, pe, ca, trace


def sweep_general(xs, ys, r, s, t):
    """Generalized sweep over unit pairs, seeded at a 3-stable (r, s, t).

    Units are encoded as 2*i for vertex i and 2*i+1 for edge i, so the
    clockwise successor is code+1 mod 2n and the terminal vertex of a unit is
    ceil(code/2) mod n.  Visits run from (v_s, v_t) to (v_t, v_r) inclusive;
    each visit carries the farthest-vertex annotations: for a vertex pair the
    first/last tied farthest vertex of its chord, for an edge pair the first
    farthest vertex of the trailing chord and the last tied farthest vertex
    of the leading chord.

    Returns (u1s, u2s, firsts, lasts, pe, ca) as parallel lists.
    """
    n = len(xs)
    two_n = 2 * n
    u1 = 2 * s
    u2 = 2 * t
    end1 = 2 * t
    end2 = 2 * r
    A = r        # cursor against the leading (terminal-vertex) chord
    A0 = r       # cursor against the trailing (start-vertex) chord
    pe = 0
    ca = 0
    u1s = []
    u2s = []
    firsts = []
    lasts = []
    while True:
        j = ((u1 + 1) >> 1) % n
        k = ((u2 + 1) >> 1) % n
        cur = abs(_cr(xs, ys, j, k, A))
        while True:
            pe += 1
            nA = A + 1 if A + 1 < n else 0
            nxt = abs(_cr(xs, ys, j, k, nA))
            if nxt > cur:
                A = nA
                cur = nxt
                ca += 1
            else:
                break
        kind1 = u1 & 1
        kind2 = u2 & 1
        if kind1 == 0 and kind2 == 0:
            first = A
            pe += 1
            nA = A + 1 if A + 1 < n else 0
            last = nA if (cur > 0 and abs(_cr(xs, ys, j, k, nA)) == cur) else A
        elif kind1 == 1 and kind2 == 1:
            j0 = u1 >> 1
            k0 = u2 >> 1
            cur0 = abs(_cr(xs, ys, j0, k0, A0))
            while True:
                pe += 1
                nA = A0 + 1 if A0 + 1 < n else 0
                nxt = abs(_cr(xs, ys, j0, k0, nA))
                if nxt > cur0:
                    A0 = nA
                    cur0 = nxt
                    ca += 1
                else:
                    break
            first = A0
            pe += 1
            nA = A + 1 if A + 1 < n else 0
            last = nA if (cur > 0 and abs(_cr(xs, ys, j, k, nA)) == cur) else A
        else:
            first = A
            last = A
        u1s.append(u1)
        u2s.append(u2)
        firsts.append(first)
        lasts.append(last)
        if u1 == end1 and u2 == end2:
            break
        pe += 1
        if kind1 == 0 and kind2 == 0:
            cmp = _cmp_corner_kind(xs, ys, n, j, k, A, 0)
            advance_first = cmp <= 0
        elif kind1 == 1 and kind2 == 1:
            cmp = _cmp_corner_kind(xs, ys, n, j, k, A, 1)
            advance_first = cmp <= 0
        elif kind1 == 0:
            cmp = _cmp_corner_kind(xs, ys, n, j, k, A, 2)
            advance_first = cmp < 0  # strict: the one asymmetric case
        else:
            cmp = _cmp_corner_kind(xs, ys, n, j, k, A, 3)
            advance_first = cmp <= 0
        if advance_first:
            u1 = u1 + 1 if u1 + 1 < two_n else 0
        else:
            u2 = u2 + 1 if u2 + 1 < two_n else 0
        ca += 1
    return u1s, u2s, firsts, lasts, pe, ca
