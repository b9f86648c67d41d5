"""Kernel lane selection: compiled extension when available, pure Python
otherwise.

Both lanes implement identical control flow on denominator-cleared integer
coordinates, so results, traces, and counters are bit-for-bit equal; the
compiled lane is restricted to coordinates below COMPILED_COORD_LIMIT where
its 128/256-bit arithmetic is provably overflow-free.

The lane is chosen per call: "auto" prefers the compiled kernel, and the
TRI_EXTREMAL_KERNEL environment variable or set_lane() can force "pure" or
"compiled".
"""

from __future__ import annotations

import os
from contextlib import contextmanager

import numpy as np

from . import _kernel_py

try:  # pragma: no cover - depends on the build environment
    from . import _kernel_c
except ImportError:  # pragma: no cover
    _kernel_c = None

HAVE_COMPILED = _kernel_c is not None

#: Largest |coordinate| (after denominator clearing) the compiled lane accepts.
COMPILED_COORD_LIMIT = 10 ** 17

_LANES = ("auto", "pure", "compiled")
_active = os.environ.get("TRI_EXTREMAL_KERNEL", "auto")
if _active not in _LANES:
    _active = "auto"


def active_lane() -> str:
    """The effective default lane name: 'compiled' or 'pure'."""
    if _active == "auto":
        return "compiled" if HAVE_COMPILED else "pure"
    return _active


def set_lane(name: str) -> None:
    global _active
    if name not in _LANES:
        raise ValueError(f"unknown kernel lane {name!r}")
    if name == "compiled" and not HAVE_COMPILED:
        raise RuntimeError("compiled kernel is not available")
    _active = name


@contextmanager
def use_lane(name: str):
    prev = _active
    set_lane(name)
    try:
        yield
    finally:
        set_lane(prev)


def _resolve(polygon):
    """Pick the lane for one polygon: returns (module, xs, ys)."""
    if _active != "pure" and HAVE_COMPILED:
        arrays = polygon.int_arrays()
        if arrays is not None and polygon.max_abs_int() <= COMPILED_COORD_LIMIT:
            return _kernel_c, arrays[0], arrays[1]
        if _active == "compiled":
            raise RuntimeError("coordinates exceed the compiled kernel range")
    xs, ys, _ = polygon.int_coords()
    return _kernel_py, xs, ys


def validate_convex_raw(xs, ys):
    """Validation entry taking raw coordinate sequences (lists or arrays)."""
    if isinstance(xs, np.ndarray):
        if _active != "pure" and HAVE_COMPILED:
            return _kernel_c.validate_convex(xs, ys)
        return _kernel_py.validate_convex([int(v) for v in xs],
                                          [int(v) for v in ys])
    if all(isinstance(v, int) for v in xs) and all(isinstance(v, int) for v in ys):
        if (_active != "pure" and HAVE_COMPILED and len(xs) > 1024
                and max(max(map(abs, xs)), max(map(abs, ys))) < 2 ** 62):
            return _kernel_c.validate_convex(np.array(xs, dtype=np.int64),
                                             np.array(ys, dtype=np.int64))
    return _kernel_py.validate_convex(xs, ys)


def find_one(polygon, counters=None):
    mod, xs, ys = _resolve(polygon)
    r, s, t, pe, ca = mod.find_one(xs, ys)
    if counters is not None:
        counters.bump(pe=pe, ca=ca)
    return r, s, t


def step1_largest_rooted(polygon, root, counters=None):
    mod, xs, ys = _resolve(polygon)
    b, c, pe, ca = mod.step1_largest_rooted(xs, ys, root)
    if counters is not None:
        counters.bump(pe=pe, ca=ca)
    return b, c


def climb_view(polygon, direction, a, b, c, counters=None):
    mod, xs, ys = _resolve(polygon)
    a1, b1, c1, pe, ca = mod.climb_view(xs, ys, len(xs), direction, a, b, c)
    if counters is not None:
        counters.bump(pe=pe, ca=ca)
    return a1, b1, c1


def stable_triple(polygon, i, j, k, counters=None):
    mod, xs, ys = _resolve(polygon)
    ok, pe = mod.stable_triple(xs, ys, i, j, k)
    if counters is not None:
        counters.bump(pe=pe)
    return ok


def sweep_stable(polygon, r, s, t, counters=None, want_trace=False):
    mod, xs, ys = _resolve(polygon)
    reported, pe, ca, trace = mod.sweep_stable(xs, ys, r, s, t, want_trace)
    if counters is not None:
        counters.bump(pe=pe, ca=ca)
    return reported, trace


def sweep_general(polygon, r, s, t, counters=None):
    mod, xs, ys = _resolve(polygon)
    u1s, u2s, firsts, lasts, pe, ca = mod.sweep_general(xs, ys, r, s, t)
    if counters is not None:
        counters.bump(pe=pe, ca=ca)
    return u1s, u2s, firsts, lasts
