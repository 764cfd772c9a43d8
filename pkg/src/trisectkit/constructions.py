"""Explicit curve constructions: standard systems and slope curves on a handle."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .multicurve import Layout, Multicurve


def standard_alpha(g: int) -> Multicurve:
    """One chord from side 4i to side 4i+2 per handle."""
    return Multicurve(g, [((4 * i, 0), (4 * i + 2, 0)) for i in range(g)])


def standard_beta(g: int) -> Multicurve:
    return Multicurve(g, [((4 * i + 1, 0), (4 * i + 3, 0)) for i in range(g)])


def _slope_passes(p: int, q: int, handle: int):
    """Passes of the straight (p, q) line on the square of one handle.

    ``p`` counts crossings with the vertical edge (sides 4h+1/4h+3) and ``q``
    with the horizontal edge (sides 4h/4h+2).  The square is drawn with side
    4h at the bottom, 4h+1 on the right, 4h+2 on top and 4h+3 on the left.
    """
    for shift in range(1, 50):
        x0 = Fraction(1, 2 * abs(q) + 3) / shift
        y0 = Fraction(1, 3 * abs(p) + 5) / (shift + 1)
        events = []
        if q:
            for m in range(abs(q)):
                # y0 + q t hits the next horizontal edge
                t = (Fraction(m + 1) - y0) / abs(q) if q > 0 else (y0 + m) / abs(q)
                x = (x0 + p * t) % 1
                events.append((t, "h", x))
        if p:
            for m in range(abs(p)):
                t = (Fraction(m + 1) - x0) / abs(p) if p > 0 else (x0 + m) / abs(p)
                y = (y0 + q * t) % 1
                events.append((t, "v", y))
        ts = [e[0] for e in events]
        coords = [e[2] for e in events]
        if len(set(ts)) == len(ts) and 0 not in coords:
            break
    else:
        raise RuntimeError("no generic offset found")
    events.sort()
    hx = sorted(e[2] for e in events if e[1] == "h")
    vy = sorted(e[2] for e in events if e[1] == "v")
    passes = []
    for _, kind, c in events:
        if kind == "h":
            tok = (2 * handle, hx.index(c))
            passes.append((tok, -1 if q > 0 else 1))
        else:
            tok = (2 * handle + 1, vy.index(c))
            passes.append((tok, 1 if p > 0 else -1))
    return passes, hx, vy


def slope_curve(p: int, q: int, g: int = 1, handle: int = 0) -> Multicurve:
    """Simple closed curve of slope (p, q) on handle ``handle`` of the genus-g polygon.

    Homology class: ``p`` times the class crossing sides 4h+1/4h+3 plus ``q``
    times the class crossing sides 4h/4h+2 (signs as in ``homology_class``).
    """
    if gcd(p, q) != 1:
        raise ValueError(f"slope ({p},{q}) is not primitive")
    passes, hx, vy = _slope_passes(p, q, handle)
    lay = Layout(g)
    lay.lines[2 * handle] = [(2 * handle, i) for i in range(len(hx))]
    lay.lines[2 * handle + 1] = [(2 * handle + 1, i) for i in range(len(vy))]
    lay.curves = [passes]
    return lay.to_multicurve()


def union(*curves: Multicurve, order=None) -> Multicurve:
    """Disjoint union; callers guarantee the pieces are disjoint on the surface.

    Curves are stacked per side in argument order, which is only meaningful for
    pieces living on different handles or parallel copies.
    """
    from .multicurve import layout_of, merge_layouts

    lays = [layout_of(c, tag=k) for k, c in enumerate(curves)]
    return merge_layouts(lays, order).to_multicurve()
