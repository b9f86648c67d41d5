"""Benchmark the compiled kernel against the pure Python fallback.

Runs the 3-stable enumeration and the generalized pipeline on the same
instances through both lanes, checks the outputs agree, and reports wall
times and speedups.

    python benchmarks/compare_kernels.py [--sizes 2e4,5e4,1e5] [--seed 1]
"""

import argparse
import time

import tri_extremal as te
from tri_extremal import kernel
from tri_extremal.counters import Counters


def run(lane, p, mode):
    with kernel.use_lane(lane):
        c = Counters()
        t0 = time.perf_counter()
        if mode == "3stable":
            out = te.all_3stable(p, c)
        else:
            out = te.enumerate_g3stable(p, c)
        return out, time.perf_counter() - t0, c


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="2e4,5e4,1e5")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    if not kernel.HAVE_COMPILED:
        print("compiled kernel not built; nothing to compare")
        return 1
    sizes = [int(float(tok)) for tok in args.sizes.split(",")]
    print(f"{'n':>9}  {'mode':<8} {'pure':>9} {'compiled':>9} {'speedup':>8}  match")
    for n in sizes:
        p = te.random_convex(n, seed=args.seed, bound=max(10 ** 6, int(n ** 1.5)))
        for mode in ("3stable", "general"):
            out_p, t_p, c_p = run("pure", p, mode)
            out_c, t_c, c_c = run("compiled", p, mode)
            match = out_p == out_c and \
                (c_p.predicate_evals, c_p.cursor_advances) == \
                (c_c.predicate_evals, c_c.cursor_advances)
            print(f"{n:>9}  {mode:<8} {t_p:>8.3f}s {t_c:>8.3f}s "
                  f"{t_p / t_c if t_c > 0 else float('inf'):>7.1f}x  {match}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
