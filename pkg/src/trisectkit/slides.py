"""Surface-framed handle slides of one curve over another along an embedded arc.

An arc is recorded relative to the faces of a multicurve, i.e. the pieces the
polygon is cut into by the chords.  It starts on one side of a chord of the
sliding component, crosses polygon sides through *gaps* (gap ``t`` of a side
sits between slots ``t-1`` and ``t``) and ends on one side of a chord of the
component slid over.  Arcs visit every face at most once, so they are embedded
and miss the multicurve away from their endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .multicurve import (
    Layout,
    Multicurve,
    MulticurveError,
    check_multicurve,
    layout_of,
    reduce_layout,
    reverse_passes,
    validate_multicurve,
)
from .overlay import PlanarMap
from .surface import BoundaryPoint, is_lower, lower_side, partner_side, side_pair


class SlideError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Attachment:
    component: int
    chord: tuple  # (BoundaryPoint, BoundaryPoint), lower endpoint first
    side: int  # +1: the face left of the chord run from its lower endpoint; -1 the other

    def encode(self) -> str:
        p, q = self.chord
        return f"{self.component}@{p.side}.{p.slot}-{q.side}.{q.slot}{'+' if self.side > 0 else '-'}"

    @classmethod
    def decode(cls, text: str) -> "Attachment":
        comp, rest = text.split("@")
        sign = rest[-1]
        a, b = rest[:-1].split("-")
        p = BoundaryPoint(*map(int, a.split(".")))
        q = BoundaryPoint(*map(int, b.split(".")))
        return cls(int(comp), (p, q), 1 if sign == "+" else -1)


@dataclass(frozen=True, order=True)
class SlideArc:
    source: Attachment
    target: Attachment
    crossings: tuple = ()  # BoundaryPoint(side, gap), in order along the arc

    def encode(self) -> str:
        cr = ",".join(f"{c.side}.{c.slot}" for c in self.crossings)
        return f"{self.source.encode()}|{cr}|{self.target.encode()}"

    @classmethod
    def decode(cls, text: str) -> "SlideArc":
        s, cr, t = text.strip().split("|")
        crossings = tuple(
            BoundaryPoint(*map(int, c.split("."))) for c in filter(None, cr.split(","))
        )
        return cls(Attachment.decode(s), Attachment.decode(t), crossings)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)


class _Faces:
    """Faces of a single multicurve with their chord sides and gaps."""

    def __init__(self, L: Multicurve):
        self.L = L
        self.layout = layout_of(L)
        self.pm = PlanarMap(self.layout)
        comps = L.components
        self.comp_of_chord = {ch: i for i, comp in enumerate(comps) for ch in comp}
        self.edge_of_side = {}
        self.side_of_edge = {}
        for cid, rec in enumerate(self.pm.chords):
            key = tuple(sorted((rec.p, rec.q)))
            forward = 1 if rec.p == key[0] else -1
            for side in (1, -1):
                edge = ("c", cid, 0, forward * side)
                att = Attachment(self.comp_of_chord[key], key, side)
                self.edge_of_side[(key, side)] = edge
                self.side_of_edge[edge] = att
        self.face_sides: list[list[Attachment]] = [[] for _ in self.pm.faces]
        self.face_gaps: list[list[BoundaryPoint]] = [[] for _ in self.pm.faces]
        for f, walk in enumerate(self.pm.faces):
            for e in walk:
                if e[0] == "c":
                    self.face_sides[f].append(self.side_of_edge[e])
                else:
                    self.face_gaps[f].append(BoundaryPoint(e[1], e[2]))
        for f in range(len(self.face_sides)):
            self.face_sides[f].sort()

    def face_of_side(self, att: Attachment) -> int:
        try:
            edge = self.edge_of_side[(att.chord, att.side)]
        except KeyError:
            raise SlideError(f"chord {att.chord} is not in the multicurve") from None
        return self.pm.face_of(edge)

    def across(self, gap: BoundaryPoint) -> int:
        n = self.pm.n_side[gap.side]
        if not 0 <= gap.slot <= n:
            raise SlideError(f"gap {gap} out of range")
        return self.pm.face_of(("g", partner_side(gap.side), n - gap.slot))

    def face_of_gap(self, gap: BoundaryPoint) -> int:
        return self.pm.face_of(("g", gap.side, gap.slot))


def _face_path(faces: _Faces, arc: SlideArc) -> list[int]:
    f = faces.face_of_side(arc.source)
    path = [f]
    for gap in arc.crossings:
        if faces.face_of_gap(gap) != f:
            raise SlideError(f"arc crosses gap {gap} which does not bound the current face")
        f = faces.across(gap)
        path.append(f)
    if faces.face_of_side(arc.target) != f:
        raise SlideError("arc does not end in a face bounded by its target chord side")
    if len(set(path)) != len(path):
        raise SlideError("arc revisits a face and is not embedded")
    return path


def validate_arc(L: Multicurve, arc: SlideArc, faces: Optional[_Faces] = None) -> None:
    faces = faces or _Faces(L)
    if arc.source.component == arc.target.component:
        raise SlideError("slide arc endpoints lie on the same component")
    for att in (arc.source, arc.target):
        comp = faces.comp_of_chord.get(att.chord)
        if comp is None:
            raise SlideError(f"chord {att.chord} is not in the multicurve")
        if comp != att.component:
            raise SlideError(f"chord {att.chord} belongs to component {comp}, not {att.component}")
    _face_path(faces, arc)


def _oriented(lay: Layout, ci: int, att: Attachment) -> tuple[list, int]:
    """Passes of curve ``ci`` oriented so the attachment face is on the left,
    together with the index k of the attaching chord (from pass k to pass k+1)."""
    curve = lay.curves[ci]
    pts = lay.points()
    for attempt in range(2):
        for k, (entry, exit_) in enumerate(lay.chords_of(curve, pts)):
            if tuple(sorted((entry, exit_))) == att.chord:
                forward = entry == att.chord[0]
                if (att.side == 1) == forward:
                    return curve, k
                break
        curve = reverse_passes(curve)
    raise SlideError("attachment chord not found on its component")


def band_slide(L: Multicurve, i: int, j: int, arc: SlideArc) -> Multicurve:
    """Replace component ``i`` by its band sum with a push-off of component ``j``.

    The push-off sits on the side of component ``j`` where the arc arrives and
    the band follows the arc.  The result is reduced.
    """
    check_multicurve(L)
    if i == j:
        raise SlideError("cannot slide a component over itself")
    if arc.source.component != i or arc.target.component != j:
        raise SlideError(
            f"arc joins components {arc.source.component} and {arc.target.component}, not {i} and {j}"
        )
    faces = _Faces(L)
    validate_arc(L, arc, faces)
    lay = faces.layout.copy()

    src, k = _oriented(lay, i, arc.source)
    tgt, kt = _oriented(lay, j, arc.target)
    r, rt = len(src), len(tgt)

    after: dict = {}
    before: dict = {}
    copies = []
    for m in range(rt):
        tok, d = tgt[(kt + 1 + m) % rt]
        new = ("copy", m)
        (after if d == 1 else before)[tok] = new
        copies.append((new, d))

    # band tokens per lower-side gap, listed in lower-side order
    gap_tokens: dict = {}
    out_passes, back_passes = [], []
    for m, gap in enumerate(arc.crossings):
        d = 1 if is_lower(gap.side) else -1
        left, right = ("band", m, "L"), ("band", m, "R")
        pair = side_pair(gap.side)
        n = len(lay.lines[pair])
        g = gap.slot if d == 1 else n - gap.slot
        gap_tokens[(pair, g)] = [right, left] if d == 1 else [left, right]
        out_passes.append((left, d))
        back_passes.append((right, -d))
    back_passes.reverse()

    new_lines = []
    for pair, line in enumerate(lay.lines):
        out = []
        for g in range(len(line) + 1):
            if g > 0 and line[g - 1] in after:
                out.append(after[line[g - 1]])
            out.extend(gap_tokens.get((pair, g), []))
            if g < len(line):
                if line[g] in before:
                    out.append(before[line[g]])
                out.append(line[g])
        new_lines.append(out)

    band_sum = [src[(k + 1 + m) % r] for m in range(r)] + out_passes + copies + back_passes
    lay.lines = new_lines
    lay.curves[i] = band_sum
    reduce_layout(lay)
    result = lay.to_multicurve()
    v = validate_multicurve(result.surface, result)
    if v is not None:
        raise SlideError(f"band sum produced an invalid multicurve ({v})")
    return result


def enumerate_slide_arcs(L: Multicurve, i: int, j: int, m: int = 2) -> list[SlideArc]:
    """All face-path arcs from component ``i`` to component ``j`` with at most ``m`` crossings."""
    check_multicurve(L)
    if i == j:
        return []
    faces = _Faces(L)
    out = []
    starts = [
        att
        for fs in faces.face_sides
        for att in fs
        if att.component == i
    ]
    for start in sorted(starts):
        f0 = faces.face_of_side(start)
        stack = [(f0, (), (f0,))]
        while stack:
            f, crossings, visited = stack.pop()
            for att in faces.face_sides[f]:
                if att.component == j:
                    out.append(SlideArc(start, att, crossings))
            if len(crossings) >= m:
                continue
            for gap in faces.face_gaps[f]:
                nf = faces.across(gap)
                if nf in visited:
                    continue
                stack.append((nf, crossings + (gap,), visited + (nf,)))
    out = sorted(set(out), key=lambda a: (a.n_crossings, a.encode()))
    return out
