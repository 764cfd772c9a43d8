"""Built-in example diagrams, addressed by name.

Names::

    standard-s3(g)        Heegaard diagram, beta_i dual to alpha_i
    s1s2(g,k)             first k pairs parallel, the rest dual
    lens(p,q)             genus 1, beta of slope (p,q); H_1 = Z/p
    unlink-L  unlink-L(g) standard-s3(g) with L_i of slope (1,1) on handle i
    hopf-L                standard-s3(2) with the band sum of unlink-L's two curves
    lens-L(p)             standard-s3(2) with L = {(p,1) on handle 0, (1,1) on handle 1}
    trisection-abc        genus-1 trisection, abc one of 000 111 100 010 001
    sum(X,Y,...)          connected sum of diagrams of the same kind

Each L is surface-framed. A (1,1) curve on a standard handle is an unknot whose
surface framing is +-1, so surgery on unlink-L and hopf-L yields S^3.
"""

from __future__ import annotations

import re
from functools import reduce as _fold

from .constructions import slope_curve, standard_alpha, standard_beta, union
from .heegaard import HeegaardDiagram, SurgeryInstance
from .multicurve import Multicurve
from .trisection import (
    TrisectionDiagram,
    connected_sum,
    connected_sum_multicurves,
    genus_one_piece,
)

# Band sum of the two (1,1) curves of unlink-L along the shortest arc through
# the polygon. Listed explicitly so the example does not depend on the arc
# enumeration order; tests check it against band_slide.
HOPF_L_CHORDS = (
    ((0, 0), (5, 1)),
    ((1, 0), (4, 0)),
    ((2, 0), (3, 0)),
    ((4, 1), (5, 0)),
    ((6, 0), (7, 1)),
    ((6, 1), (7, 0)),
)

NAMES = (
    "standard-s3(g)",
    "s1s2(g,k)",
    "lens(p,q)",
    "unlink-L",
    "unlink-L(g)",
    "hopf-L",
    "lens-L(p)",
    "trisection-000",
    "trisection-111",
    "trisection-100",
    "trisection-010",
    "trisection-001",
    "sum(X,Y,...)",
)


def standard_s3(g: int) -> HeegaardDiagram:
    return HeegaardDiagram(standard_alpha(g), standard_beta(g))


def s1s2(g: int, k: int) -> HeegaardDiagram:
    if not 0 <= k <= g:
        raise ValueError("need 0 <= k <= g")
    alpha = standard_alpha(g)
    parallel = [ch for ch in alpha.chords if ch[0].side // 4 < k]
    dual = [ch for ch in standard_beta(g).chords if ch[0].side // 4 >= k]
    return HeegaardDiagram(alpha, Multicurve(g, parallel + dual))


def lens(p: int, q: int) -> HeegaardDiagram:
    return HeegaardDiagram(standard_alpha(1), slope_curve(p, q))


def unlink_L(g: int = 2) -> SurgeryInstance:
    L = union(*(slope_curve(1, 1, g, h) for h in range(g)))
    return SurgeryInstance(standard_s3(g), L)


def hopf_L() -> SurgeryInstance:
    return SurgeryInstance(standard_s3(2), Multicurve(2, HOPF_L_CHORDS))


def lens_L(p: int) -> SurgeryInstance:
    L = union(slope_curve(p, 1, 2, 0), slope_curve(1, 1, 2, 1))
    return SurgeryInstance(standard_s3(2), L)


def genus_one_trisection(code: str) -> TrisectionDiagram:
    if code == "000":
        return TrisectionDiagram(standard_alpha(1), standard_beta(1), slope_curve(1, 1))
    if code == "111":
        a = standard_alpha(1)
        return TrisectionDiagram(a, a, a)
    sectors = {"100": 1, "010": 2, "001": 3}
    if code in sectors:
        return genus_one_piece(sectors[code])
    raise KeyError(f"no genus-1 trisection {code!r}")


def _sum_heegaard(D1: HeegaardDiagram, D2: HeegaardDiagram) -> HeegaardDiagram:
    return HeegaardDiagram(
        connected_sum_multicurves(D1.alpha, D2.alpha), connected_sum_multicurves(D1.beta, D2.beta)
    )


def _sum_surgery(S1: SurgeryInstance, S2: SurgeryInstance) -> SurgeryInstance:
    return SurgeryInstance(
        _sum_heegaard(S1.diagram, S2.diagram), connected_sum_multicurves(S1.L, S2.L)
    )


def _sum2(x, y):
    kinds = {
        TrisectionDiagram: connected_sum,
        HeegaardDiagram: _sum_heegaard,
        SurgeryInstance: _sum_surgery,
    }
    if type(x) is not type(y) or type(x) not in kinds:
        raise ValueError("sum() needs diagrams of the same kind")
    return kinds[type(x)](x, y)


def _split_args(body: str) -> list[str]:
    args, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise KeyError("unbalanced parentheses")
        elif ch == "," and depth == 0:
            args.append(body[start:i].strip())
            start = i + 1
    if depth:
        raise KeyError("unbalanced parentheses")
    args.append(body[start:].strip())
    return args


_INT_ARGS = {
    "standard-s3": (standard_s3, 1),
    "s1s2": (s1s2, 2),
    "lens": (lens, 2),
    "unlink-L": (unlink_L, 1),
    "lens-L": (lens_L, 1),
}


def catalog(name: str):
    """Return the example called ``name``; raises KeyError for unknown names."""
    name = name.strip()
    if name.startswith("example:"):
        name = name[len("example:"):]
    if name == "hopf-L":
        return hopf_L()
    if name == "unlink-L":
        return unlink_L()
    m = re.fullmatch(r"trisection-([01]{3})", name)
    if m:
        return genus_one_trisection(m.group(1))
    m = re.fullmatch(r"([A-Za-z0-9-]+)\((.*)\)", name, flags=re.S)
    if not m:
        raise KeyError(f"unknown example {name!r}")
    head, body = m.groups()
    if head == "sum":
        parts = [catalog(a) for a in _split_args(body)]
        if len(parts) < 2:
            raise KeyError("sum() needs at least two arguments")
        return _fold(_sum2, parts)
    if head not in _INT_ARGS:
        raise KeyError(f"unknown example {name!r}")
    fn, arity = _INT_ARGS[head]
    try:
        args = [int(a) for a in _split_args(body)]
    except ValueError:
        raise KeyError(f"bad arguments in {name!r}") from None
    if len(args) != arity:
        raise KeyError(f"{head} takes {arity} integer argument(s)")
    return fn(*args)
