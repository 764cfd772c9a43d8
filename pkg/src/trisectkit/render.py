"""Static SVG drawing of the fundamental polygon with its chord families."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .fileformat import _families_of
from .multicurve import Multicurve

COLORS = {"alpha": "#d62728", "beta": "#1f77b4", "gamma": "#2ca02c", "L": "#9467bd", "curves": "#222222"}
_FALLBACK = ("#8c564b", "#e377c2", "#7f7f7f", "#bcbd22")


def _vertex(k: int, n: int, r: float, c: float) -> tuple[float, float]:
    t = 2 * math.pi * k / n - math.pi / 2
    return c + r * math.cos(t), c + r * math.sin(t)


def _point(side: int, slot: int, count: int, n: int, r: float, c: float):
    # slot 0 sits nearest the side's first vertex (counter-clockwise order)
    (x0, y0), (x1, y1) = _vertex(side, n, r, c), _vertex(side + 1, n, r, c)
    t = (slot + 1) / (count + 1)
    return x0 + t * (x1 - x0), y0 + t * (y1 - y0)


def render_svg(value, size: int = 480) -> str:
    """SVG text for a Multicurve, HeegaardDiagram, SurgeryInstance or TrisectionDiagram.

    Families are drawn on one polygon, each with its own slot spacing; chords are
    quadratic curves bent toward the centre so that nested chords stay visible.
    """
    fams = _families_of(value)
    genus = fams[0][1].genus
    n = 4 * genus
    c = size / 2
    r = size * 0.42
    poly = " ".join(f"{x:.2f},{y:.2f}" for x, y in (_vertex(k, n, r, c) for k in range(n)))
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<polygon points="{poly}" fill="none" stroke="#444" stroke-width="1.5"/>',
    ]
    for k in range(n):
        (x0, y0), (x1, y1) = _vertex(k, n, r, c), _vertex(k + 1, n, r, c)
        mx, my = (x0 + x1) / 2, (y0 + y1) / 2
        lx, ly = c + (mx - c) * 1.08, c + (my - c) * 1.08
        out.append(
            f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="11" text-anchor="middle" '
            f'dominant-baseline="middle" fill="#444">{k}</text>'
        )
    for idx, (name, M) in enumerate(fams):
        color = COLORS.get(name, _FALLBACK[idx % len(_FALLBACK)])
        out.append(f'<g stroke="{color}" fill="none" stroke-width="1.6"><title>{escape(name)}</title>')
        out += _chord_paths(M, n, r, c)
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _chord_paths(M: Multicurve, n: int, r: float, c: float) -> list[str]:
    counts = M.slot_counts
    paths = []
    for p, q in M.chords:
        x0, y0 = _point(p.side, p.slot, counts[p.side], n, r, c)
        x1, y1 = _point(q.side, q.slot, counts[q.side], n, r, c)
        mx, my = (x0 + x1) / 2, (y0 + y1) / 2
        cx, cy = mx + 0.35 * (c - mx), my + 0.35 * (c - my)
        paths.append(f'<path d="M{x0:.2f},{y0:.2f} Q{cx:.2f},{cy:.2f} {x1:.2f},{y1:.2f}"/>')
    return paths
