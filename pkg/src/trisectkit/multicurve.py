"""Multicurves as non-crossing chord systems in the fundamental polygon.

A multicurve is a set of chords.  Each chord joins two boundary points of the
4g-gon; a point and its partner on the glued side are the same point of the
surface, so following chord -> identification -> chord ... closes up into the
components.  Chords of one multicurve never cross, which is a statement about
the cyclic order of their endpoints only.

Internally most constructions work on a :class:`Layout`, which stores each
skeleton edge as an ordered line of tokens (the crossing points, read along
the lower-numbered side of the pair) and each curve as the cyclic sequence of
its *passes* ``(token, direction)``.  ``direction`` is ``+1`` when the curve
leaves the polygon through the lower side of the pair and ``-1`` when it leaves
through the upper side.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Optional

import numpy as np

from .surface import (
    BoundaryPoint,
    SurfaceModel,
    is_lower,
    lower_side,
    partner_side,
    side_pair,
    upper_side,
)

Chord = tuple[BoundaryPoint, BoundaryPoint]
Pass = tuple[Hashable, int]


class MulticurveError(ValueError):
    """Raised when a chord system violates a multicurve invariant."""

    def __init__(self, violation: "Violation"):
        super().__init__(str(violation))
        self.violation = violation


@dataclass(frozen=True)
class Violation:
    invariant: str  # "range" | "endpoint" | "matching" | "laminarity"
    chords: tuple
    message: str

    def __str__(self) -> str:
        return f"{self.invariant}: {self.message}"


def _normalize_chord(p, q) -> Chord:
    p, q = BoundaryPoint(*p), BoundaryPoint(*q)
    return (p, q) if p <= q else (q, p)


def _renumber(genus: int, chords) -> tuple[Chord, ...]:
    """Replace slot labels by ordinals per side, keeping their order."""
    labels: dict[int, set] = {}
    for c in chords:
        for p in c:
            labels.setdefault(p.side, set()).add(p.slot)
    rank = {s: {t: i for i, t in enumerate(sorted(ts))} for s, ts in labels.items()}
    out = []
    for p, q in chords:
        out.append(
            _normalize_chord(
                (p.side, rank[p.side][p.slot]), (q.side, rank[q.side][q.slot])
            )
        )
    return tuple(sorted(out))


def chords_cross(c: Chord, d: Chord) -> bool:
    """Interleaving test in the cyclic boundary order; chords sharing an endpoint never cross."""
    a, b = c
    x, y = d
    if len({a, b, x, y}) < 4:
        return False
    return (a < x < b) != (a < y < b)


@dataclass(frozen=True)
class Multicurve:
    genus: int
    chords: tuple[Chord, ...]

    def __init__(self, genus: int, chords: Iterable = ()):
        normalized = [_normalize_chord(p, q) for p, q in chords]
        object.__setattr__(self, "genus", int(genus))
        object.__setattr__(self, "chords", _renumber(genus, normalized))

    @classmethod
    def empty(cls, genus: int) -> "Multicurve":
        return cls(genus, ())

    @property
    def surface(self) -> SurfaceModel:
        return SurfaceModel(self.genus)

    @cached_property
    def slot_counts(self) -> tuple[int, ...]:
        counts = [0] * (4 * self.genus)
        for c in self.chords:
            for p in c:
                if 0 <= p.side < len(counts):
                    counts[p.side] += 1
        return tuple(counts)

    def identify(self, p: BoundaryPoint) -> BoundaryPoint:
        n = self.slot_counts[p.side]
        return BoundaryPoint(partner_side(p.side), n - 1 - p.slot)

    @cached_property
    def _other_end(self) -> dict[BoundaryPoint, BoundaryPoint]:
        ends = {}
        for p, q in self.chords:
            ends[p] = q
            ends[q] = p
        return ends

    @cached_property
    def traced(self) -> tuple[tuple[tuple[BoundaryPoint, BoundaryPoint], ...], ...]:
        """Components as cyclic sequences of directed chords ``(entry, exit)``.

        Components are listed by their least chord; each starts at that chord,
        traversed from its lower endpoint, which fixes the canonical orientation.
        """
        seen: set[Chord] = set()
        comps = []
        for chord in self.chords:
            if chord in seen:
                continue
            walk = []
            entry, exit_ = chord
            while True:
                key = _normalize_chord(entry, exit_)
                if key in seen:
                    break
                seen.add(key)
                walk.append((entry, exit_))
                entry = self.identify(exit_)
                exit_ = self._other_end[entry]
            comps.append(tuple(walk))
        return tuple(comps)

    @property
    def components(self) -> tuple[tuple[Chord, ...], ...]:
        return tuple(tuple(_normalize_chord(*c) for c in comp) for comp in self.traced)

    @property
    def n_components(self) -> int:
        return len(self.traced)

    def component_of(self, chord: Chord) -> int:
        chord = _normalize_chord(*chord)
        for i, comp in enumerate(self.components):
            if chord in comp:
                return i
        raise KeyError(f"chord {chord} not in multicurve")

    def component(self, i: int) -> "Multicurve":
        return Multicurve(self.genus, self.components[i])

    def sub(self, indices: Iterable[int]) -> "Multicurve":
        comps = self.components
        return Multicurve(
            self.genus, itertools.chain.from_iterable(comps[i] for i in indices)
        )

    def homology_class(self, i: int) -> np.ndarray:
        """Class of component ``i`` in H_1 = Z^{2g}, one coordinate per skeleton edge.

        Coordinates count signed crossings with the edges; the sign is ``+1``
        when the canonical orientation leaves the polygon through the lower side.
        """
        vec = np.zeros(2 * self.genus, dtype=np.int64)
        for _, exit_ in self.traced[i]:
            vec[side_pair(exit_.side)] += 1 if is_lower(exit_.side) else -1
        return vec

    def encode(self) -> bytes:
        body = ";".join(f"{p.side}.{p.slot}-{q.side}.{q.slot}" for p, q in self.chords)
        return f"g{self.genus}:{body}".encode("ascii")

    @classmethod
    def decode(cls, data: bytes | str) -> "Multicurve":
        text = data.decode("ascii") if isinstance(data, bytes) else data
        head, _, body = text.partition(":")
        if not head.startswith("g"):
            raise ValueError(f"bad multicurve encoding {text!r}")
        chords = []
        for item in filter(None, body.split(";")):
            a, b = item.split("-")
            chords.append(
                (tuple(map(int, a.split("."))), tuple(map(int, b.split("."))))
            )
        return cls(int(head[1:]), chords)

    def __len__(self) -> int:
        return len(self.chords)

    def __repr__(self) -> str:
        return f"Multicurve({self.encode().decode()})"


def validate_multicurve(surface: SurfaceModel, M: Multicurve) -> Optional[Violation]:
    """Return the first violated multicurve invariant, or ``None`` when valid."""
    if M.genus != surface.genus:
        return Violation("range", (), f"multicurve genus {M.genus} != surface genus {surface.genus}")
    points: dict[BoundaryPoint, Chord] = {}
    for c in M.chords:
        for p in c:
            if not 0 <= p.side < surface.n_sides:
                return Violation("range", (c,), f"chord {c[0]}-{c[1]} uses side {p.side}")
        if c[0] == c[1]:
            return Violation("endpoint", (c,), f"chord {c[0]}-{c[1]} is degenerate")
        for p in c:
            if p in points:
                return Violation(
                    "endpoint", (points[p], c), f"point {p} is an endpoint of two chords"
                )
            points[p] = c
    counts = M.slot_counts
    for s in range(0, surface.n_sides):
        t = partner_side(s)
        if s < t and counts[s] != counts[t]:
            lone = s if counts[s] > counts[t] else t
            chord = next(c for c in M.chords if any(p.side == lone for p in c))
            return Violation(
                "matching",
                (chord,),
                f"side {s} has {counts[s]} slots but its partner side {t} has {counts[t]}; "
                f"chord {chord[0]}-{chord[1]} has no matching slot",
            )
    for c, d in itertools.combinations(M.chords, 2):
        if chords_cross(c, d):
            return Violation(
                "laminarity", (c, d), f"chords {c[0]}-{c[1]} and {d[0]}-{d[1]} cross"
            )
    return None


def check_multicurve(M: Multicurve, surface: Optional[SurfaceModel] = None) -> Multicurve:
    v = validate_multicurve(surface or M.surface, M)
    if v is not None:
        raise MulticurveError(v)
    return M


def trace_components(M: Multicurve) -> list[tuple[Chord, ...]]:
    return list(M.components)


# ---------------------------------------------------------------------------
# Layouts


@dataclass
class Layout:
    """Mutable working form: token lines per skeleton edge plus pass sequences."""

    genus: int
    lines: list[list] = field(default_factory=list)
    curves: list[list[Pass]] = field(default_factory=list)

    def __post_init__(self):
        if not self.lines:
            self.lines = [[] for _ in range(2 * self.genus)]

    def copy(self) -> "Layout":
        return Layout(self.genus, [list(l) for l in self.lines], [list(c) for c in self.curves])

    def index_map(self) -> dict:
        """token -> (pair, position along the lower side)."""
        return {tok: (p, i) for p, line in enumerate(self.lines) for i, tok in enumerate(line)}

    def points(self, idx=None) -> dict:
        """token -> (point on lower side, point on upper side)."""
        idx = idx or self.index_map()
        out = {}
        for tok, (p, i) in idx.items():
            n = len(self.lines[p])
            out[tok] = (
                BoundaryPoint(lower_side(p), i),
                BoundaryPoint(upper_side(p), n - 1 - i),
            )
        return out

    def chords_of(self, curve: list[Pass], pts=None) -> list[tuple[BoundaryPoint, BoundaryPoint]]:
        """Directed chords ``(entry, exit)``; chord k runs from pass k to pass k+1."""
        pts = pts or self.points()
        r = len(curve)
        out = []
        for k in range(r):
            tok, d = curve[k]
            tok2, d2 = curve[(k + 1) % r]
            entry = pts[tok][1] if d == 1 else pts[tok][0]
            exit_ = pts[tok2][0] if d2 == 1 else pts[tok2][1]
            out.append((entry, exit_))
        return out

    def prune(self) -> None:
        self.curves = [c for c in self.curves if c]
        used = {tok for c in self.curves for tok, _ in c}
        self.lines = [[t for t in line if t in used] for line in self.lines]

    def to_multicurve(self) -> Multicurve:
        self.prune()
        pts = self.points()
        chords = []
        for curve in self.curves:
            chords.extend(self.chords_of(curve, pts))
        return Multicurve(self.genus, chords)


def reverse_passes(curve: list[Pass]) -> list[Pass]:
    return [(tok, -d) for tok, d in reversed(curve)]


def layout_of(M: Multicurve, tag=None) -> Layout:
    """Layout whose curves follow ``M.traced`` in order and orientation.

    Tokens are ``(tag, pair, position)`` so layouts of different multicurves can
    be merged without collisions.
    """
    lay = Layout(M.genus)
    for pair in range(2 * M.genus):
        n = M.slot_counts[lower_side(pair)]
        lay.lines[pair] = [(tag, pair, i) for i in range(n)]
    for comp in M.traced:
        passes = []
        for _, exit_ in comp:
            pair = side_pair(exit_.side)
            if is_lower(exit_.side):
                passes.append(((tag, pair, exit_.slot), 1))
            else:
                n = M.slot_counts[exit_.side]
                passes.append(((tag, pair, n - 1 - exit_.slot), -1))
        # pass k of a traced component is the exit of chord k; rotate so that
        # chord k runs from pass k to pass k+1
        lay.curves.append(passes[-1:] + passes[:-1])
    return lay


def merge_layouts(layouts: list[Layout], order: Optional[list[int]] = None) -> Layout:
    """Concatenate token lines: on every lower side the layouts appear in ``order``."""
    genus = layouts[0].genus
    order = order if order is not None else list(range(len(layouts)))
    out = Layout(genus)
    for pair in range(2 * genus):
        out.lines[pair] = [t for k in order for t in layouts[k].lines[pair]]
    for lay in layouts:
        out.curves.extend([list(c) for c in lay.curves])
    return out


# ---------------------------------------------------------------------------
# Reduction with respect to the skeleton


def _find_backtrack(lay: Layout, idx: dict) -> Optional[tuple[int, int]]:
    for ci, curve in enumerate(lay.curves):
        r = len(curve)
        if r < 2:
            continue
        for k in range(r):
            (t1, d1), (t2, d2) = curve[k], curve[(k + 1) % r]
            if d1 != -d2:
                continue
            p1, i1 = idx[t1]
            p2, i2 = idx[t2]
            if p1 == p2 and abs(i1 - i2) == 1:
                return ci, k
    return None


def reduce_layout(lay: Layout) -> Layout:
    """Remove skeleton bigons innermost-first, in place.

    A skeleton bigon is a chord with both ends at adjacent slots of one side;
    in pass terms the curve crosses an edge and immediately crosses back.
    Components that disappear entirely bound disks and are dropped.
    """
    while True:
        idx = lay.index_map()
        hit = _find_backtrack(lay, idx)
        if hit is None:
            break
        ci, k = hit
        curve = lay.curves[ci]
        r = len(curve)
        gone = {curve[k][0], curve[(k + 1) % r][0]}
        if r == 2:
            lay.curves[ci] = []
        else:
            keep = [curve[(k + 2 + m) % r] for m in range(r - 2)]
            lay.curves[ci] = keep
        lay.lines = [[t for t in line if t not in gone] for line in lay.lines]
        lay.curves = [c for c in lay.curves if c]
    return lay


def reduce(M: Multicurve) -> Multicurve:
    return reduce_layout(layout_of(M)).to_multicurve()


def is_reduced(M: Multicurve) -> bool:
    return not any(p.side == q.side for p, q in M.chords)


def canonical_encoding(M: Multicurve) -> bytes:
    """Encoding of the reduced form; slot labels are ordinals, so relabellings agree."""
    return reduce(M).encode()
