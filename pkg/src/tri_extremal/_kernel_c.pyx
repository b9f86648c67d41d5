# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sweep kernels: a statement-for-statement mirror of _kernel_py.

Coordinates are int64; all cross products run in 128-bit integers and the
kill-criterion comparison of two 128-bit products runs in 256 bits, so every
predicate is exact for |coordinates| up to 10**17 (the dispatcher enforces
that bound).  Results and counters are bit-for-bit identical to the pure
Python lane.
"""

import numpy as np

cdef extern from *:
    """
    typedef __int128 ti_i128;

    static void ti_mul_u128(unsigned __int128 x, unsigned __int128 y,
                            unsigned __int128 *hi, unsigned __int128 *lo) {
        unsigned __int128 x0 = (unsigned long long)x, x1 = x >> 64;
        unsigned __int128 y0 = (unsigned long long)y, y1 = y >> 64;
        unsigned __int128 p00 = x0 * y0;
        unsigned __int128 p01 = x0 * y1;
        unsigned __int128 p10 = x1 * y0;
        unsigned __int128 p11 = x1 * y1;
        unsigned __int128 mid = p01 + p10;
        unsigned __int128 hi_extra = (mid < p01) ? (((unsigned __int128)1) << 64) : 0;
        unsigned __int128 lo_ = p00 + (mid << 64);
        unsigned __int128 carry = (lo_ < p00) ? 1 : 0;
        *hi = p11 + (mid >> 64) + hi_extra + carry;
        *lo = lo_;
    }

    /* sign of |a*b| - |c*d|, exact via 256-bit magnitudes */
    static int ti_cmp_absprod(ti_i128 a, ti_i128 b, ti_i128 c, ti_i128 d) {
        unsigned __int128 ua = a < 0 ? -(unsigned __int128)a : (unsigned __int128)a;
        unsigned __int128 ub = b < 0 ? -(unsigned __int128)b : (unsigned __int128)b;
        unsigned __int128 uc = c < 0 ? -(unsigned __int128)c : (unsigned __int128)c;
        unsigned __int128 ud = d < 0 ? -(unsigned __int128)d : (unsigned __int128)d;
        unsigned __int128 lh, ll, rh, rl;
        ti_mul_u128(ua, ub, &lh, &ll);
        ti_mul_u128(uc, ud, &rh, &rl);
        if (lh < rh) return -1;
        if (lh > rh) return 1;
        if (ll < rl) return -1;
        if (ll > rl) return 1;
        return 0;
    }
    """
    ctypedef long long i128 "ti_i128"
    int ti_cmp_absprod(i128 a, i128 b, i128 c, i128 d) nogil


ctypedef long long i64
ctypedef Py_ssize_t idx_t


cdef inline i128 _cr(const i64* xs, const i64* ys, idx_t i, idx_t j, idx_t k) nogil:
    return ((<i128>(xs[j] - xs[i])) * (<i128>(ys[k] - ys[i]))
            - (<i128>(ys[j] - ys[i])) * (<i128>(xs[k] - xs[i])))


cdef inline i128 _iabs(i128 v) nogil:
    return -v if v < 0 else v


cdef inline idx_t _mod(idx_t a, idx_t n) nogil:
    # C remainder is negative for negative operands (cdivision); normalize
    a %= n
    return a + n if a < 0 else a


cdef inline idx_t _step(idx_t a, int d, idx_t n) nogil:
    a += d
    if a < 0:
        a += n
    elif a >= n:
        a -= n
    return a


def validate_convex(xs_arr, ys_arr):
    cdef i64[::1] xs_mv = np.ascontiguousarray(xs_arr, dtype=np.int64)
    cdef i64[::1] ys_mv = np.ascontiguousarray(ys_arr, dtype=np.int64)
    cdef const i64* xs = &xs_mv[0]
    cdef const i64* ys = &ys_mv[0]
    cdef idx_t n = xs_mv.shape[0]
    cdef idx_t i, j, k
    cdef int sigma = 0, s, h1, h2
    cdef idx_t transitions = 0
    cdef i64 d1x, d1y, d2x, d2y
    cdef i128 c
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        k = j + 1 if j + 1 < n else 0
        d1x = xs[j] - xs[i]
        d1y = ys[j] - ys[i]
        if d1x == 0 and d1y == 0:
            return 5, i
        c = (<i128>d1x) * (<i128>(ys[k] - ys[j])) - (<i128>d1y) * (<i128>(xs[k] - xs[j]))
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


cdef idx_t _step1(const i64* xs, const i64* ys, idx_t n, idx_t root,
                  idx_t* out_b, idx_t* out_c, long long* pe, long long* ca) nogil:
    cdef idx_t best_b = (root + 1) % n
    cdef idx_t best_c = (root + 2) % n
    cdef i128 best_area2 = -1
    cdef idx_t c = 2
    cdef idx_t b_off, b
    cdef i128 cur, nxt
    for b_off in range(1, n - 1):
        b = root + b_off
        if b >= n:
            b -= n
        if c <= b_off:
            c = b_off + 1
            ca[0] += 1
        cur = _iabs(_cr(xs, ys, root, b, (root + c) % n))
        while c + 1 < n:
            pe[0] += 1
            nxt = _iabs(_cr(xs, ys, root, b, (root + c + 1) % n))
            if nxt > cur:
                c += 1
                ca[0] += 1
                cur = nxt
            else:
                break
        pe[0] += 1
        if cur > best_area2:
            best_area2 = cur
            best_b = b
            best_c = (root + c) % n
    out_b[0] = best_b
    out_c[0] = best_c
    return 0


def step1_largest_rooted(xs_arr, ys_arr, root):
    cdef i64[::1] xs_mv = xs_arr
    cdef i64[::1] ys_mv = ys_arr
    cdef idx_t n = xs_mv.shape[0]
    cdef idx_t b = 0, c = 0
    cdef long long pe = 0, ca = 0
    _step1(&xs_mv[0], &ys_mv[0], n, root, &b, &c, &pe, &ca)
    return b, c, pe, ca


cdef void _climb(const i64* xs, const i64* ys, idx_t n, int d,
                 idx_t* a, idx_t* b, idx_t* c, long long* pe, long long* ca) nogil:
    cdef idx_t av = a[0], bv = b[0], cv = c[0], nb, nc
    cdef bint moved = True
    av = _step(av, d, n)
    ca[0] += 1
    while moved:
        moved = False
        while True:
            pe[0] += 1
            nb = _step(bv, d, n)
            if _iabs(_cr(xs, ys, av, cv, nb)) > _iabs(_cr(xs, ys, av, cv, bv)):
                bv = nb
                ca[0] += 1
                moved = True
            else:
                break
        while True:
            pe[0] += 1
            nc = _step(cv, d, n)
            if _iabs(_cr(xs, ys, av, bv, nc)) > _iabs(_cr(xs, ys, av, bv, cv)):
                cv = nc
                ca[0] += 1
                moved = True
            else:
                break
    a[0] = av
    b[0] = bv
    c[0] = cv


def climb_view(xs_arr, ys_arr, n_unused, d, a, b, c):
    cdef i64[::1] xs_mv = xs_arr
    cdef i64[::1] ys_mv = ys_arr
    cdef idx_t n = xs_mv.shape[0]
    cdef idx_t av = a, bv = b, cv = c
    cdef long long pe = 0, ca = 0
    _climb(&xs_mv[0], &ys_mv[0], n, d, &av, &bv, &cv, &pe, &ca)
    return av, bv, cv, pe, ca


cdef inline bint _corner_ok(const i64* xs, const i64* ys, idx_t n,
                            idx_t m, idx_t p, idx_t q) nogil:
    cdef i128 dm = _iabs(_cr(xs, ys, p, q, m))
    cdef idx_t prv = m - 1 if m > 0 else n - 1
    cdef idx_t nxt = m + 1 if m + 1 < n else 0
    return (dm >= _iabs(_cr(xs, ys, p, q, prv))
            and dm >= _iabs(_cr(xs, ys, p, q, nxt)))


cdef inline bint _cyclic_cw(idx_t n, idx_t i, idx_t j, idx_t k) nogil:
    return _mod(j - i, n) + _mod(k - j, n) + _mod(i - k, n) == n


cdef bint _stable_triple(const i64* xs, const i64* ys, idx_t n,
                         idx_t i, idx_t j, idx_t k, long long* pe) nogil:
    if i == j or j == k or i == k or not _cyclic_cw(n, i, j, k):
        return False
    pe[0] += 2
    if not _corner_ok(xs, ys, n, i, j, k):
        return False
    pe[0] += 2
    if not _corner_ok(xs, ys, n, j, k, i):
        return False
    pe[0] += 2
    if not _corner_ok(xs, ys, n, k, i, j):
        return False
    return True


def stable_triple(xs_arr, ys_arr, i, j, k):
    cdef i64[::1] xs_mv = xs_arr
    cdef i64[::1] ys_mv = ys_arr
    cdef long long pe = 0
    cdef bint ok = _stable_triple(&xs_mv[0], &ys_mv[0], xs_mv.shape[0], i, j, k, &pe)
    return bool(ok), pe


cdef void _canon3(idx_t n, idx_t* i, idx_t* j, idx_t* k) nogil:
    cdef idx_t a = i[0], b = j[0], c = k[0], m
    m = a
    if b < m:
        m = b
    if c < m:
        m = c
    if m == b:
        i[0] = b; j[0] = c; k[0] = a
    elif m == c:
        i[0] = c; j[0] = a; k[0] = b


def find_one(xs_arr, ys_arr):
    cdef i64[::1] xs_mv = xs_arr
    cdef i64[::1] ys_mv = ys_arr
    cdef const i64* xs = &xs_mv[0]
    cdef const i64* ys = &ys_mv[0]
    cdef idx_t n = xs_mv.shape[0]
    cdef long long pe = 0, ca = 0
    if n == 3:
        return 0, 1, 2, 0, 0
    cdef idx_t b0 = 0, c0 = 0
    _step1(xs, ys, n, 0, &b0, &c0, &pe, &ca)
    cdef idx_t a = 0
    pe += 2
    cdef idx_t i, j, k
    if _corner_ok(xs, ys, n, a, b0, c0):
        i = a; j = b0; k = c0
        _canon3(n, &i, &j, &k)
        return i, j, k, pe, ca
    pe += 1
    cdef i128 da = _iabs(_cr(xs, ys, b0, c0, a))
    cdef int d
    cdef idx_t b, c
    if _iabs(_cr(xs, ys, b0, c0, (a + 1) % n)) > da:
        d = 1
        b = b0; c = c0
    else:
        d = -1
        b = c0; c = b0
    while True:
        _climb(xs, ys, n, d, &a, &b, &c, &pe, &ca)
        pe += 2
        if _corner_ok(xs, ys, n, a, b, c):
            break
        pe += 1
        if not (_iabs(_cr(xs, ys, b, c, _step(a, d, n))) > _iabs(_cr(xs, ys, b, c, a))):
            raise RuntimeError("climb invariant violated: no improving neighbor")
    if d == 1:
        i = a; j = b; k = c
    else:
        i = a; j = c; k = b
    _canon3(n, &i, &j, &k)
    return i, j, k, pe, ca


cdef int _cmp_corner(const i64* xs, const i64* ys, idx_t j, idx_t k, idx_t a,
                     i64 d1x, i64 d1y, idx_t o2, i64 d2x, i64 d2y) nogil:
    cdef i128 w = (<i128>d1x) * (<i128>d2y) - (<i128>d1y) * (<i128>d2x)
    if w == 0:
        return -1
    cdef i64 ox = xs[o2] - xs[j]
    cdef i64 oy = ys[o2] - ys[j]
    cdef i128 tn = (<i128>ox) * (<i128>d2y) - (<i128>oy) * (<i128>d2x)
    cdef i128 sn = (<i128>ox) * (<i128>d1y) - (<i128>oy) * (<i128>d1x)
    if w > 0:
        if tn < 0 or sn < 0:
            return -1
    else:
        if tn > 0 or sn > 0:
            return -1
    cdef i128 rhs_b = ((<i128>(xs[k] - xs[j])) * (<i128>d1y)
                       - (<i128>(ys[k] - ys[j])) * (<i128>d1x))
    return ti_cmp_absprod(_cr(xs, ys, j, k, a), w, tn, rhs_b)


cdef int _cmp_corner_kind(const i64* xs, const i64* ys, idx_t n,
                          idx_t j, idx_t k, idx_t a, int kind) nogil:
    cdef idx_t jp = j + 1 if j + 1 < n else 0
    cdef idx_t jm = j - 1 if j > 0 else n - 1
    cdef idx_t kp = k + 1 if k + 1 < n else 0
    cdef idx_t km = k - 1 if k > 0 else n - 1
    if kind == 0:
        return _cmp_corner(xs, ys, j, k, a,
                           xs[kp] - xs[k], ys[kp] - ys[k],
                           k, xs[j] - xs[jp], ys[j] - ys[jp])
    if kind == 1:
        return _cmp_corner(xs, ys, j, k, a,
                           xs[k] - xs[km], ys[k] - ys[km],
                           k, xs[jm] - xs[j], ys[jm] - ys[j])
    if kind == 2:
        return _cmp_corner(xs, ys, j, k, a,
                           xs[k] - xs[km], ys[k] - ys[km],
                           k, xs[j] - xs[jp], ys[j] - ys[jp])
    return _cmp_corner(xs, ys, j, k, a,
                       xs[kp] - xs[k], ys[kp] - ys[k],
                       k, xs[jm] - xs[j], ys[jm] - ys[j])


def sweep_stable(xs_arr, ys_arr, r, s, t, want_trace):
    cdef i64[::1] xs_mv = xs_arr
    cdef i64[::1] ys_mv = ys_arr
    cdef const i64* xs = &xs_mv[0]
    cdef const i64* ys = &ys_mv[0]
    cdef idx_t n = xs_mv.shape[0]
    cdef long long pe = 0, ca = 0
    cdef idx_t B = s, C = t, A = r, nA, A1, ci, cj, ck
    cdef i128 cur, nxt
    cdef bint ok
    cdef int decision
    cdef bint record = bool(want_trace)
    reported = []
    trace = [] if record else None
    while True:
        cur = _iabs(_cr(xs, ys, B, C, A))
        while True:
            pe += 1
            nA = A + 1 if A + 1 < n else 0
            nxt = _iabs(_cr(xs, ys, B, C, nA))
            if nxt > cur:
                A = nA
                cur = nxt
                ca += 1
            else:
                break
        here = []
        ok = _stable_triple(xs, ys, n, A, B, C, &pe)
        if ok:
            ci = A; cj = B; ck = C
            _canon3(n, &ci, &cj, &ck)
            here.append((ci, cj, ck))
        A1 = A + 1 if A + 1 < n else 0
        ok = _stable_triple(xs, ys, n, A1, B, C, &pe)
        if ok:
            ci = A1; cj = B; ck = C
            _canon3(n, &ci, &cj, &ck)
            here.append((ci, cj, ck))
        reported.extend(here)
        pe += 1
        if _cmp_corner_kind(xs, ys, n, B, C, A, 0) > 0:
            decision = 1
            if record:
                trace.append((B, C, A, decision, here))
            C = C + 1 if C + 1 < n else 0
        else:
            decision = 0
            if record:
                trace.append((B, C, A, decision, here))
            B = B + 1 if B + 1 < n else 0
        ca += 1
        if B == t and C == r:
            break
    return reported, pe, ca, trace


def sweep_general(xs_arr, ys_arr, r, s, t):
    cdef i64[::1] xs_mv = xs_arr
    cdef i64[::1] ys_mv = ys_arr
    cdef const i64* xs = &xs_mv[0]
    cdef const i64* ys = &ys_mv[0]
    cdef idx_t n = xs_mv.shape[0]
    cdef idx_t two_n = 2 * n
    cdef idx_t u1 = 2 * s, u2 = 2 * t
    cdef idx_t end1 = 2 * t, end2 = 2 * r
    cdef idx_t A = r, A0 = r, nA, j, k, j0, k0, first, last
    cdef long long pe = 0, ca = 0
    cdef i128 cur, cur0, nxt
    cdef int kind1, kind2, cmp
    cdef bint advance_first
    cdef idx_t cap = 4 * n + 4
    u1s = np.empty(cap, dtype=np.int64)
    u2s = np.empty(cap, dtype=np.int64)
    firsts = np.empty(cap, dtype=np.int64)
    lasts = np.empty(cap, dtype=np.int64)
    cdef i64[::1] u1s_mv = u1s
    cdef i64[::1] u2s_mv = u2s
    cdef i64[::1] firsts_mv = firsts
    cdef i64[::1] lasts_mv = lasts
    cdef idx_t count = 0
    while True:
        j = ((u1 + 1) >> 1) % n
        k = ((u2 + 1) >> 1) % n
        cur = _iabs(_cr(xs, ys, j, k, A))
        while True:
            pe += 1
            nA = A + 1 if A + 1 < n else 0
            nxt = _iabs(_cr(xs, ys, j, k, nA))
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
            last = nA if (cur > 0 and _iabs(_cr(xs, ys, j, k, nA)) == cur) else A
        elif kind1 == 1 and kind2 == 1:
            j0 = u1 >> 1
            k0 = u2 >> 1
            cur0 = _iabs(_cr(xs, ys, j0, k0, A0))
            while True:
                pe += 1
                nA = A0 + 1 if A0 + 1 < n else 0
                nxt = _iabs(_cr(xs, ys, j0, k0, nA))
                if nxt > cur0:
                    A0 = nA
                    cur0 = nxt
                    ca += 1
                else:
                    break
            first = A0
            pe += 1
            nA = A + 1 if A + 1 < n else 0
            last = nA if (cur > 0 and _iabs(_cr(xs, ys, j, k, nA)) == cur) else A
        else:
            first = A
            last = A
        u1s_mv[count] = u1
        u2s_mv[count] = u2
        firsts_mv[count] = first
        lasts_mv[count] = last
        count += 1
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
            advance_first = cmp < 0
        else:
            cmp = _cmp_corner_kind(xs, ys, n, j, k, A, 3)
            advance_first = cmp <= 0
        if advance_first:
            u1 = u1 + 1 if u1 + 1 < two_n else 0
        else:
            u2 = u2 + 1 if u2 + 1 < two_n else 0
        ca += 1
    return (u1s[:count], u2s[:count], firsts[:count], lasts[:count], pe, ca)
