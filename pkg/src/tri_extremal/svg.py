"""Static SVG rendering of sweep traces: one frame per iteration, stacked
vertically in a single document (floats are display-only; geometry stays
exact elsewhere)."""

from __future__ import annotations

from typing import List

from .polygon import Polygon
from .three_stable import SweepTrace

MAX_FRAMES = 80
_FRAME_SIZE = 220.0
_PAD = 12.0


def _subsample(records, cap):
    if len(records) <= cap:
        return list(enumerate(records))
    step = (len(records) - 1) / (cap - 1)
    picked = sorted({round(i * step) for i in range(cap)})
    return [(i, records[i]) for i in picked]


def render_trace(p: Polygon, trace: SweepTrace) -> str:
    """Render polygon, cursors, and reported triangles per iteration."""
    pts = [(float(x), float(y)) for x, y in (p.coords(i) for i in range(p.n))]
    min_x = min(x for x, _ in pts)
    max_x = max(x for x, _ in pts)
    min_y = min(y for _, y in pts)
    max_y = max(y for _, y in pts)
    span = max(max_x - min_x, max_y - min_y) or 1.0
    scale = (_FRAME_SIZE - 2 * _PAD) / span

    def sx(x: float) -> float:
        return _PAD + (x - min_x) * scale

    def sy(y: float) -> float:
        # SVG y grows downward
        return _PAD + (max_y - y) * scale

    frames = _subsample(trace.records, MAX_FRAMES)
    height = len(frames) * _FRAME_SIZE or _FRAME_SIZE
    out: List[str] = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" width="{_FRAME_SIZE:.0f}" '
               f'height="{height:.0f}" viewBox="0 0 {_FRAME_SIZE:.0f} {height:.0f}">')
    out.append(f'<!-- {len(trace.records)} iterations, {len(frames)} frames -->')
    poly_attr = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
    for row, (it, rec) in enumerate(frames):
        out.append(f'<g transform="translate(0 {row * _FRAME_SIZE:.0f})">')
        out.append(f'<polygon points="{poly_attr}" fill="none" stroke="#555" stroke-width="1"/>')
        for tri in rec.reported:
            tri_pts = " ".join(f"{sx(pts[i][0]):.2f},{sy(pts[i][1]):.2f}" for i in tri)
            out.append(f'<polygon points="{tri_pts}" fill="#2a7fff" fill-opacity="0.25" '
                       f'stroke="#2a7fff" stroke-width="0.8"/>')
        bx, by = pts[rec.b]
        cx, cy = pts[rec.c]
        ax, ay = pts[rec.a]
        out.append(f'<line x1="{sx(bx):.2f}" y1="{sy(by):.2f}" x2="{sx(cx):.2f}" '
                   f'y2="{sy(cy):.2f}" stroke="#d62728" stroke-width="1.4"/>')
        out.append(f'<circle cx="{sx(bx):.2f}" cy="{sy(by):.2f}" r="3" fill="#d62728"/>')
        out.append(f'<circle cx="{sx(cx):.2f}" cy="{sy(cy):.2f}" r="3" fill="#ff7f0e"/>')
        out.append(f'<circle cx="{sx(ax):.2f}" cy="{sy(ay):.2f}" r="3" fill="#2ca02c"/>')
        out.append(f'<text x="4" y="10" font-size="8" fill="#333">it={it} B={rec.b} '
                   f'C={rec.c} A={rec.a} {rec.decision}</text>')
        out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"
