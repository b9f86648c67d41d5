"""Command-line front end.

Subcommands: max-triangle, list-3stable, list-g3stable, min-enclosing (run on
a polygon file), gen (write a random instance), verify (fast paths against
brute-force oracles), bench (linear-scaling counters and wall times).

Exit codes: 0 success, 1 internal invariant violation, 2 user/input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import kernel, oracle
from .counters import Counters
from .enclosing import EnclosingTriangle, min_enclosing_triangle
from .exact_geom import format_rational
from .general_stable import GTriangle, enumerate_g3stable
from .polygon import (GenerationFailure, Polygon, PolygonError, emit_polygon,
                      parse_polygon, random_convex)
from .three_stable import (InternalInvariantError, SweepTrace, TraceRecord,
                           VertexTriangle, enumerate_all_3stable,
                           find_one_3stable, max_area_triangle, triangle_area)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2


class _CliError(Exception):
    pass


def _read_polygon(path: str) -> tuple[Polygon, str]:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}")
    digest = hashlib.sha256(data).hexdigest()
    try:
        return parse_polygon(data.decode("utf-8")), digest
    except UnicodeDecodeError as exc:
        raise _CliError(f"{path} is not UTF-8 text: {exc}")
    except PolygonError as exc:
        raise _CliError(f"{path}: {exc}")


def _point_json(pt) -> list:
    return [format_rational(pt.x), format_rational(pt.y)]


def _triangle_json(p: Polygon, t: VertexTriangle) -> dict:
    return {
        "indices": list(t.indices()),
        "corners": [_point_json(p.point(i)) for i in t.indices()],
        "area": format_rational(triangle_area(p, t)),
    }


def _gtriangle_json(g: GTriangle) -> dict:
    return {
        "corners": [
            {"unit": {"kind": u.kind, "index": u.index}, "point": _point_json(pt)}
            for u, pt in g.corners
        ],
        "area": format_rational(g.area),
    }


def _enclosing_json(t: EnclosingTriangle) -> dict:
    return {
        "a": _point_json(t.a),
        "b": _point_json(t.b),
        "c": _point_json(t.c),
        "area": format_rational(t.area),
        "source": _gtriangle_json(t.source),
    }


def _report(args, p: Polygon, digest: str, algorithm: str, result: dict,
            counters: Counters, wall: float) -> None:
    if getattr(args, "json", False):
        payload = {
            "algorithm": algorithm,
            "input": {"digest": digest, "n": p.n, "reversed": p.was_reversed},
            "result": result,
            "counters": counters.report_dict(),
        }
        if getattr(args, "timings", False):
            payload["wall_time_s"] = wall
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"{algorithm}: n={p.n} (input {'reversed to clockwise' if p.was_reversed else 'clockwise'})")
        _print_human(result)
        cd = counters.report_dict()
        print("counters: " + " ".join(f"{k}={v}" for k, v in sorted(cd.items())))
        print(f"wall time: {wall:.6f}s (algorithm only)")


def _print_human(result, indent="  "):
    def rec(obj, pad):
        if isinstance(obj, dict):
            for k, v in obj.items():
                if isinstance(v, (dict, list)) and v and not _is_flat(v):
                    print(f"{pad}{k}:")
                    rec(v, pad + "  ")
                else:
                    print(f"{pad}{k}: {_flat(v)}")
        elif isinstance(obj, list):
            for v in obj:
                if isinstance(v, (dict, list)) and v and not _is_flat(v):
                    rec(v, pad + "  ")
                    print()
                else:
                    print(f"{pad}- {_flat(v)}")

    rec(result, indent)


def _is_flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return not isinstance(v, (dict, list))


def _flat(v):
    if isinstance(v, list):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)


def _write_trace(path: str, trace: SweepTrace) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(trace.to_jsonl())


def _write_svg(path: str, p: Polygon, trace: SweepTrace) -> None:
    from .svg import render_trace

    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_trace(p, trace))


def _general_trace(p: Polygon, counters: Counters) -> SweepTrace:
    """Serialize the generalized sweeps in the common trace schema: chords are
    the units' terminal vertices; the cursor advanced after each visit names
    the decision; terminal visits (no decision) are omitted."""
    seed = find_one_3stable(p, counters)
    n = p.n
    records = []
    for (r, s, t) in seed.rotations():
        u1s, u2s, firsts, lasts = kernel.sweep_general(p, r, s, t, counters)
        for i in range(len(u1s) - 1):
            decision = "KillB" if u1s[i + 1] != u1s[i] else "KillC"
            records.append(TraceRecord(int((u1s[i] + 1) // 2) % n,
                                       int((u2s[i] + 1) // 2) % n,
                                       int(firsts[i]), decision, ()))
    return SweepTrace(tuple(records))


def _cmd_run(args) -> int:
    p, digest = _read_polygon(args.polygon)
    counters = Counters()
    trace = None
    t0 = time.perf_counter()
    if args.command == "max-triangle":
        tri, area = max_area_triangle(p, counters)
        wall = time.perf_counter() - t0
        result = _triangle_json(p, tri)
    elif args.command == "list-3stable":
        want_trace = bool(args.trace or args.svg)
        tris, trace = enumerate_all_3stable(p, counters, want_trace=want_trace)
        wall = time.perf_counter() - t0
        result = {"triangles": [_triangle_json(p, t) for t in sorted(tris)]}
    elif args.command == "list-g3stable":
        triangles = enumerate_g3stable(p, counters)
        wall = time.perf_counter() - t0
        ordered = sorted(triangles, key=lambda g: tuple(
            (u.code(), str(pt.x), str(pt.y)) for u, pt in g.corners))
        result = {"triangles": [_gtriangle_json(g) for g in ordered]}
        if args.trace or args.svg:
            trace = _general_trace(p, Counters())
    elif args.command == "min-enclosing":
        best, minima = min_enclosing_triangle(p, counters)
        wall = time.perf_counter() - t0
        result = _enclosing_json(best)
        result["minima"] = [_enclosing_json(t)
                            for t in sorted(minima, key=lambda t: t.key())]
        if args.trace or args.svg:
            trace = _general_trace(p, Counters())
    else:  # pragma: no cover
        raise _CliError(f"unknown command {args.command}")
    if args.trace:
        _write_trace(args.trace, trace)
    if args.svg:
        _write_svg(args.svg, p, trace)
    _report(args, p, digest, args.command, result, counters, wall)
    return EXIT_OK


def _cmd_gen(args) -> int:
    try:
        p = random_convex(args.n, args.seed, args.bound)
    except (ValueError, GenerationFailure) as exc:
        raise _CliError(str(exc))
    text = emit_polygon(p)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --- verify -----------------------------------------------------------------

_VERIFY_MODES = ("max", "3stable", "g3stable", "enclosing")
_MODE_CAPS = {
    "max": oracle.MAX_BRUTE_MAX,
    "3stable": oracle.MAX_BRUTE_3STABLE,
    "g3stable": oracle.MAX_BRUTE_G3STABLE,
    "enclosing": oracle.MAX_BRUTE_ENCLOSING,
}


def _verify_case(case) -> tuple[int, str, bool, str]:
    idx, mode, n, seed = case
    p = random_convex(n, seed=seed, bound=10 ** 6)
    try:
        if mode == "max":
            _, fast = max_area_triangle(p)
            _, brute = oracle.brute_max_triangle(p)
            ok = fast == brute
            detail = f"area {format_rational(fast)}"
        elif mode == "3stable":
            fast3, _ = enumerate_all_3stable(p)
            ok = fast3 == oracle.brute_3stable_set(p)
            detail = f"{len(fast3)} triangles"
        elif mode == "g3stable":
            fastg = enumerate_g3stable(p)
            ok = fastg == oracle.brute_g3stable_set(p)
            detail = f"{len(fastg)} triangles"
        else:
            best, _ = min_enclosing_triangle(p)
            ok = best.area == oracle.brute_min_enclosing(p).area
            detail = f"area {format_rational(best.area)}"
    except Exception as exc:  # surfaced as a failure, never a crash
        return idx, f"mode={mode} n={n} seed={seed}", False, f"exception: {exc}"
    return idx, f"mode={mode} n={n} seed={seed}", ok, detail


def _cmd_verify(args) -> int:
    import random as _random

    rng = _random.Random(args.seed)
    cases = []
    idx = 0
    for mode in _VERIFY_MODES:
        cap = min(args.n_max, _MODE_CAPS[mode])
        for _ in range(args.cases):
            n = rng.randint(4, max(4, cap))
            cases.append((idx, mode, n, rng.randrange(2 ** 32)))
            idx += 1
    workers = os.environ.get("TRI_EXTREMAL_THREADS")
    workers = int(workers) if workers else (os.cpu_count() or 1)
    workers = max(1, min(workers, len(cases)))
    if workers == 1:
        results = [_verify_case(c) for c in cases]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verify_case, cases, chunksize=4))
    failures = 0
    for idx, label, ok, detail in sorted(results):
        status = "PASS" if ok else "FAIL"
        print(f"case {idx:04d} {label}: {status} ({detail})")
        failures += 0 if ok else 1
    print(f"verify: {len(results) - failures}/{len(results)} passed")
    return EXIT_OK if failures == 0 else EXIT_INTERNAL


# --- bench -------------------------------------------------------------------

def _parse_sizes(text: str) -> list[int]:
    sizes = []
    for tok in text.split(","):
        tok = tok.strip().lower().replace("_", "")
        if not tok:
            continue
        try:
            val = int(tok) if "e" not in tok else int(float(tok))
        except ValueError:
            raise _CliError(f"bad size {tok!r}")
        if val < 3:
            raise _CliError(f"size {val} too small")
        sizes.append(val)
    if not sizes:
        raise _CliError("no sizes given")
    return sizes


def _default_bound(n: int) -> int:
    # strictly convex integer n-gons need a coordinate range growing like
    # n**1.5; this default leaves a comfortable margin at every size
    return max(10 ** 6, int(n ** 1.5))


def _cmd_bench(args) -> int:
    sizes = _parse_sizes(args.sizes)
    rows = []
    for n in sizes:
        bound = args.bound if args.bound else _default_bound(n)
        try:
            p = random_convex(n, seed=args.seed, bound=bound)
        except (ValueError, GenerationFailure) as exc:
            raise _CliError(f"n={n}: {exc}")
        row = {"n": n, "bound": bound, "lane": kernel.active_lane()}
        if args.mode in ("3stable", "both"):
            c = Counters()
            t0 = time.perf_counter()
            tris, _ = enumerate_all_3stable(p, c)
            dt = time.perf_counter() - t0
            row["three_stable"] = {
                "wall_time_s": dt,
                "triangles": len(tris),
                "counters": c.report_dict(),
                "advances_per_n": c.cursor_advances / n,
            }
        if args.mode in ("general", "both"):
            c = Counters()
            t0 = time.perf_counter()
            gset = enumerate_g3stable(p, c)
            dt = time.perf_counter() - t0
            row["general"] = {
                "wall_time_s": dt,
                "triangles": len(gset),
                "counters": c.report_dict(),
                "advances_per_n": c.cursor_advances / n,
                "batch_scan_advances": c.batch_scan_advances,
            }
        rows.append(row)
    if args.json:
        print(json.dumps({"sizes": rows}, sort_keys=True))
        return EXIT_OK
    for row in rows:
        parts = [f"n={row['n']}", f"bound={row['bound']}", f"lane={row['lane']}"]
        for key in ("three_stable", "general"):
            if key in row:
                r = row[key]
                parts.append(f"{key}: {r['wall_time_s']:.3f}s "
                             f"adv/n={r['advances_per_n']:.2f} "
                             f"tris={r['triangles']}")
        print("  ".join(parts))
    for key in ("three_stable", "general"):
        if all(key in row for row in rows) and len(rows) > 1:
            ratios = []
            for prev, cur in zip(rows, rows[1:]):
                tp = prev[key]["wall_time_s"]
                ratios.append(cur[key]["wall_time_s"] / tp if tp > 0 else float("inf"))
            print(f"{key} time ratios between consecutive sizes: "
                  + ", ".join(f"{r:.2f}" for r in ratios))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tri-extremal",
        description="Extremal triangles in convex polygons, exactly and in linear time.")
    ap.add_argument("--lane", choices=("auto", "pure", "compiled"), default=None,
                    help="kernel lane (default: auto)")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, help_ in (("max-triangle", "maximum-area inscribed triangle"),
                        ("list-3stable", "all 3-stable inscribed triangles"),
                        ("list-g3stable", "all generally 3-stable triangles"),
                        ("min-enclosing", "minimum-area enclosing triangle")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("polygon", help="polygon file (one 'x y' per line)")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--timings", action="store_true",
                        help="include wall time in --json output")
        if name != "max-triangle":
            sp.add_argument("--trace", metavar="OUT.jsonl",
                            help="write the sweep trace as JSON lines")
            sp.add_argument("--svg", metavar="OUT.svg",
                            help="render the sweep as a static frame sequence")
        else:
            sp.set_defaults(trace=None, svg=None)
        sp.set_defaults(func=_cmd_run)

    sp = sub.add_parser("gen", help="generate a random convex polygon file")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--out", help="output file (default: stdout)")
    sp.set_defaults(func=_cmd_gen)

    sp = sub.add_parser("verify", help="compare fast paths against oracles")
    sp.add_argument("--n-max", type=int, default=30)
    sp.add_argument("--cases", type=int, default=25, help="cases per mode")
    sp.add_argument("--seed", type=int, default=1)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("bench", help="linear-scaling counters and wall times")
    sp.add_argument("--sizes", required=True,
                    help="comma-separated sizes, e.g. 1e5,2e5,4e5")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--bound", type=int, default=None,
                    help="coordinate bound (default: max(1e6, n**1.5))")
    sp.add_argument("--mode", choices=("3stable", "general", "both"), default="both")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_bench)
    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if args.lane:
        try:
            kernel.set_lane(args.lane)
        except RuntimeError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        # forced-compiled overflow and broken algorithm invariants land here
        if isinstance(exc, InternalInvariantError):
            print(f"internal error: {exc}", file=sys.stderr)
            return EXIT_INTERNAL
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
