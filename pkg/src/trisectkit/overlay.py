"""Overlays of multicurves with the polygon skeleton.

Every overlay is a cellular map on the surface: vertices are the polygon
vertex, the points where curves cross the skeleton and the crossings between
curves; edges are skeleton segments and chord segments; faces are the pieces
of the polygon.  Faces are traced inside the polygon with the face on the left
of every directed edge.

Regions of the complement of the curves are unions of faces glued across
skeleton segments.  Their boundary circles are traced separately, with the
region on the left, and jump across the side identifications.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .multicurve import (
    Layout,
    Multicurve,
    chords_cross,
    layout_of,
    merge_layouts,
    check_multicurve,
)
from .surface import BoundaryPoint, SurfaceModel, partner_side, side_pair, is_lower


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


@dataclass(frozen=True)
class ChordRec:
    p: BoundaryPoint  # entry point along the curve orientation
    q: BoundaryPoint  # exit point
    curve: int
    k: int


@dataclass(frozen=True)
class BoundaryCircle:
    edges: tuple
    events: tuple  # per edge: ("turn", crossing id) or ("pass", (token, dir))
    region: int
    curves: frozenset

    @property
    def turns(self) -> int:
        return sum(1 for e in self.events if e[0] == "turn")


@dataclass(frozen=True)
class Region:
    """A component of the complement of a family of curves.

    ``boundary`` lists one entry per boundary circle: the curve index it runs
    along and whether the region lies to the ``"left"`` or ``"right"`` of the
    curve's orientation (``"mixed"`` when the circle runs along several curves).
    """

    euler_characteristic: int
    genus: int
    boundary: tuple
    n_faces: int

    @property
    def n_boundary(self) -> int:
        return len(self.boundary)


class PlanarMap:
    """Combinatorial map of a layout; ``labels[i]`` is the family of curve ``i``."""

    def __init__(self, lay: Layout, labels: Optional[Sequence] = None):
        self.layout = lay
        self.genus = lay.genus
        self.labels = list(labels) if labels is not None else [0] * len(lay.curves)
        idx = lay.index_map()
        pts = lay.points(idx)
        self.n_side = [0] * (4 * self.genus)
        for pair, line in enumerate(lay.lines):
            s = 4 * (pair // 2) + pair % 2
            self.n_side[s] = self.n_side[s + 2] = len(line)
        self.pass_at = {}
        for tok, (lo, hi) in pts.items():
            self.pass_at[lo] = (tok, 1)
            self.pass_at[hi] = (tok, -1)

        self.chords: list[ChordRec] = []
        self.chord_id = {}
        for ci, curve in enumerate(lay.curves):
            for k, (p, q) in enumerate(lay.chords_of(curve, pts)):
                self.chord_id[(ci, k)] = len(self.chords)
                self.chords.append(ChordRec(p, q, ci, k))
        self.at_point = {}
        for c, rec in enumerate(self.chords):
            self.at_point[rec.p] = c
            self.at_point[rec.q] = c

        all_pts = sorted(self.at_point)
        self._rank = {p: i for i, p in enumerate(all_pts)}
        self._npts = len(all_pts)
        self._find_crossings()

    # -- geometry of chords -------------------------------------------------

    def _in_arc(self, e, a, b) -> bool:
        """e strictly inside the counterclockwise boundary arc from a to b."""
        if a < b:
            return a < e < b
        return e > a or e < b

    def _find_crossings(self):
        n = len(self.chords)
        keys = [tuple(sorted((r.p, r.q))) for r in self.chords]
        across: list[list[int]] = [[] for _ in range(n)]
        self.crossings: list[tuple[int, int]] = []
        for c, d in itertools.combinations(range(n), 2):
            if chords_cross(keys[c], keys[d]):
                if self.labels[self.chords[c].curve] == self.labels[self.chords[d].curve]:
                    raise ValueError(
                        f"chords {keys[c]} and {keys[d]} of one family cross"
                    )
                across[c].append(d)
                across[d].append(c)
        order: list[list[int]] = []
        coords = None
        for c in range(n):
            rec = self.chords[c]
            ds = across[c]
            ambiguous = any(
                chords_cross(keys[d1], keys[d2]) for d1, d2 in itertools.combinations(ds, 2)
            )
            if not ambiguous:
                def key(d, rec=rec):
                    e = self.chords[d]
                    end = e.p if self._in_arc(e.p, rec.p, rec.q) else e.q
                    return (self._rank[end] - self._rank[rec.p]) % self._npts
            else:
                coords = coords or self._coordinates(keys)
                def key(d, rec=rec):
                    return _param(coords, rec, self.chords[d])
            order.append(sorted(ds, key=key))
        # crossing ids, with position along each chord
        self.cross_list: list[list[int]] = [[] for _ in range(n)]
        self._xid = {}
        for c in range(n):
            for d in order[c]:
                pair = (min(c, d), max(c, d))
                if pair not in self._xid:
                    self._xid[pair] = len(self.crossings)
                    self.crossings.append(pair)
                self.cross_list[c].append(self._xid[pair])
        self._pos_on = {}
        for c in range(n):
            for j, x in enumerate(self.cross_list[c]):
                self._pos_on[(x, c)] = j

    def _coordinates(self, keys):
        # points in convex position on a parabola; perturb until no three chords concur
        pts = sorted(self.at_point)
        for attempt in range(50):
            xs = {
                p: Fraction(i) + (Fraction((i * i * 7919 + attempt * 131) % 1009, 3 * 1009) if attempt else 0)
                for i, p in enumerate(pts)
            }
            coords = {p: (x, x * x) for p, x in xs.items()}
            if not _has_concurrency(coords, self.chords, keys):
                return coords
        raise RuntimeError("could not place chords in general position")

    # -- traversal ----------------------------------------------------------

    def n_segments(self, c: int) -> int:
        return len(self.cross_list[c]) + 1

    def _turn_left(self, c: int, direction: int, x: int):
        rec = self.chords[c]
        a, b = (rec.p, rec.q) if direction == 1 else (rec.q, rec.p)
        c1, c2 = self.crossings[x]
        d = c2 if c1 == c else c1
        j = self._pos_on[(x, d)]
        drec = self.chords[d]
        if self._in_arc(drec.q, b, a):
            return ("c", d, j + 1, 1)
        return ("c", d, j, -1)

    def _chord_end_event(self, e):
        """What a directed chord segment runs into: ("x", crossing) or ("pt", point)."""
        _, c, s, d = e
        m = len(self.cross_list[c])
        if d == 1:
            return ("x", self.cross_list[c][s]) if s < m else ("pt", self.chords[c].q)
        return ("x", self.cross_list[c][s - 1]) if s > 0 else ("pt", self.chords[c].p)

    def next_face_edge(self, e):
        if e[0] == "g":
            _, side, g = e
            if g < self.n_side[side]:
                c = self.at_point[BoundaryPoint(side, g)]
                if self.chords[c].p == BoundaryPoint(side, g):
                    return ("c", c, 0, 1)
                return ("c", c, self.n_segments(c) - 1, -1)
            return ("g", (side + 1) % (4 * self.genus), 0)
        kind, what = self._chord_end_event(e)
        if kind == "x":
            return self._turn_left(e[1], e[3], what)
        return ("g", what.side, what.slot + 1)

    def next_boundary_edge(self, e):
        """Next edge of a region boundary circle, with the event in between."""
        kind, what = self._chord_end_event(e)
        if kind == "x":
            return self._turn_left(e[1], e[3], what), ("turn", what)
        rec = self.chords[e[1]]
        curve = self.layout.curves[rec.curve]
        r = len(curve)
        if e[3] == 1:
            nxt = self.chord_id[(rec.curve, (rec.k + 1) % r)]
            return ("c", nxt, 0, 1), ("pass", curve[(rec.k + 1) % r])
        prv = self.chord_id[(rec.curve, (rec.k - 1) % r)]
        tok, dd = curve[rec.k]
        return ("c", prv, self.n_segments(prv) - 1, -1), ("pass", (tok, -dd))

    def chord_edges(self):
        for c in range(len(self.chords)):
            for s in range(self.n_segments(c)):
                yield ("c", c, s, 1)
                yield ("c", c, s, -1)

    def gap_edges(self):
        for side in range(4 * self.genus):
            for g in range(self.n_side[side] + 1):
                yield ("g", side, g)

    # -- faces, regions -----------------------------------------------------

    def _trace_faces(self):
        self._face_of = {}
        self._faces = []
        for e in itertools.chain(self.chord_edges(), self.gap_edges()):
            if e in self._face_of:
                continue
            fid = len(self._faces)
            walk = []
            while e not in self._face_of:
                self._face_of[e] = fid
                walk.append(e)
                e = self.next_face_edge(e)
            self._faces.append(tuple(walk))

    @property
    def faces(self) -> list:
        if not hasattr(self, "_faces"):
            self._trace_faces()
        return self._faces

    def face_of(self, e) -> int:
        if not hasattr(self, "_faces"):
            self._trace_faces()
        return self._face_of[e]

    @property
    def n_vertices(self) -> int:
        return 1 + sum(len(l) for l in self.layout.lines) + len(self.crossings)

    @property
    def n_edges(self) -> int:
        chord_segments = sum(self.n_segments(c) for c in range(len(self.chords)))
        skeleton = sum(len(l) + 1 for l in self.layout.lines)
        return chord_segments + skeleton

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    def _skeleton_pairs(self):
        for side in range(4 * self.genus):
            if not is_lower(side):
                continue
            n = self.n_side[side]
            for g in range(n + 1):
                yield ("g", side, g), ("g", partner_side(side), n - g)

    def _analyse_regions(self):
        faces = self.faces
        uf = _UnionFind(len(faces))
        for e1, e2 in self._skeleton_pairs():
            uf.union(self._face_of[e1], self._face_of[e2])
        roots = sorted({uf.find(f) for f in range(len(faces))})
        rid = {r: i for i, r in enumerate(roots)}
        self._region_of_face = [rid[uf.find(f)] for f in range(len(faces))]
        nreg = len(roots)
        chi = [0] * nreg
        nf = [0] * nreg
        for f in range(len(faces)):
            chi[self._region_of_face[f]] += 1
            nf[self._region_of_face[f]] += 1
        for e1, _ in self._skeleton_pairs():
            chi[self._region_of_face[self._face_of[e1]]] -= 1
        chi[self._region_of_face[self._face_of[("g", 0, 0)]]] += 1  # polygon vertex

        self._circles = []
        seen = set()
        for e in self.chord_edges():
            if e in seen:
                continue
            edges, events = [], []
            while e not in seen:
                seen.add(e)
                edges.append(e)
                e, ev = self.next_boundary_edge(e)
                events.append(ev)
            region = self._region_of_face[self._face_of[edges[0]]]
            curves = frozenset(self.chords[x[1]].curve for x in edges)
            self._circles.append(BoundaryCircle(tuple(edges), tuple(events), region, curves))
        bnd: list[list] = [[] for _ in range(nreg)]
        for circ in self._circles:
            if len(circ.curves) == 1:
                (ci,) = circ.curves
                # circle walks the curve forwards iff the region is on the curve's left
                side = "left" if circ.edges[0][3] == 1 else "right"
                bnd[circ.region].append((ci, side))
            else:
                bnd[circ.region].append((tuple(sorted(circ.curves)), "mixed"))
        self._regions = []
        for r in range(nreg):
            b = len(bnd[r])
            twice_genus = 2 - chi[r] - b
            self._regions.append(
                Region(chi[r], twice_genus // 2, tuple(sorted(bnd[r], key=repr)), nf[r])
            )

    @property
    def regions(self) -> list[Region]:
        if not hasattr(self, "_regions"):
            self._analyse_regions()
        return self._regions

    @property
    def circles(self) -> list[BoundaryCircle]:
        if not hasattr(self, "_circles"):
            self._analyse_regions()
        return self._circles

    def crossing_counts(self) -> dict:
        out = {}
        for c, d in self.crossings:
            a, b = self.chords[c].curve, self.chords[d].curve
            key = (min(a, b), max(a, b))
            out[key] = out.get(key, 0) + 1
        return out

    def crossing_sign(self, x: int, first_curve: int) -> int:
        """Sign of crossing ``x`` with the chord of ``first_curve`` taken first."""
        c, d = self.crossings[x]
        if self.chords[c].curve != first_curve:
            c, d = d, c
        rc, rd = self.chords[c], self.chords[d]
        # right of rc is the ccw arc rc.p -> rc.q; rd starting there crosses right-to-left
        return 1 if self._in_arc(rd.p, rc.p, rc.q) else -1

    def find_bigon(self) -> Optional[BoundaryCircle]:
        regions = self.regions
        count = {}
        for circ in self._circles:
            count[circ.region] = count.get(circ.region, 0) + 1
        for circ in self._circles:
            reg = regions[circ.region]
            if circ.turns == 2 and reg.euler_characteristic == 1 and count[circ.region] == 1:
                return circ
        return None


def _param(coords, rec, other):
    (x1, y1), (x2, y2) = coords[rec.p], coords[rec.q]
    (x3, y3), (x4, y4) = coords[other.p], coords[other.q]
    dx, dy = x2 - x1, y2 - y1
    ex, ey = x4 - x3, y4 - y3
    den = dx * ey - dy * ex
    return ((x3 - x1) * ey - (y3 - y1) * ex) / den


def _has_concurrency(coords, chords, keys) -> bool:
    n = len(chords)
    for c in range(n):
        params = []
        for d in range(n):
            if d != c and chords_cross(keys[c], keys[d]):
                params.append(_param(coords, chords[c], chords[d]))
        if len(params) != len(set(params)):
            return True
    return False


# ---------------------------------------------------------------------------
# Bigon removal


def push_bigon(lay: Layout, circ: BoundaryCircle, pm: PlanarMap, mover: int) -> Layout:
    """Isotope curve ``mover`` across the bigon bounded by ``circ``.

    The arc of ``mover`` on the bigon is replaced by a parallel copy of the
    other side, placed just outside the bigon; two crossings disappear.
    """
    edges, events = list(circ.edges), list(circ.events)
    n = len(edges)
    owner = [pm.chords[e[1]].curve for e in edges]
    # rotate so the walk starts on the mover just after a turn
    start = next(
        i for i in range(n) if owner[i] == mover and events[i - 1][0] == "turn"
    )
    edges = edges[start:] + edges[:start]
    events = events[start:] + events[:start]
    owner = owner[start:] + owner[:start]
    l_end = next(i for i in range(n) if events[i][0] == "turn")
    mover_passes = [ev[1] for ev in events[:l_end] if ev[0] == "pass"]
    other_passes = [ev[1] for ev in events[l_end + 1 :] if ev[0] == "pass"]

    first = pm.chords[edges[0][1]]
    curve = lay.curves[mover]
    r = len(curve)
    if edges[0][3] == 1:
        walk = [curve[(first.k + 1 + m) % r] for m in range(r)]
    else:
        walk = [(curve[(first.k - m) % r][0], -curve[(first.k - m) % r][1]) for m in range(r)]
    l = len(mover_passes)
    assert walk[:l] == mover_passes, "bigon walk disagrees with curve passes"
    kept = walk[l:]

    new_lay = lay.copy()
    gone = {tok for tok, _ in mover_passes}
    placed = []
    for tok, d in reversed(other_passes):
        d = -d  # walking the other side from x to y
        new_tok = ("push", id(circ), len(placed), tok)
        placed.append((new_tok, d))
        for line in new_lay.lines:
            if tok in line:
                i = line.index(tok)
                line.insert(i + 1 if d == 1 else i, new_tok)
                break
    new_lay.lines = [[t for t in line if t not in gone] for line in new_lay.lines]
    new_curve = placed + kept
    if edges[0][3] != 1:
        new_curve = [(t, -d) for t, d in reversed(new_curve)]
    new_lay.curves[mover] = new_curve
    return new_lay


def _relabel_tokens(lay: Layout) -> Layout:
    """Replace tokens by small integers so repeated pushes keep them short."""
    idx = {}
    for line in lay.lines:
        for t in line:
            idx[t] = len(idx)
    return Layout(
        lay.genus,
        [[idx[t] for t in line] for line in lay.lines],
        [[(idx[t], d) for t, d in c] for c in lay.curves],
    )


def _signed_totals(pm: PlanarMap) -> dict:
    out: dict = {}
    for x, (c, d) in enumerate(pm.crossings):
        a, b = sorted((pm.chords[c].curve, pm.chords[d].curve))
        out[a, b] = out.get((a, b), 0) + pm.crossing_sign(x, a)
    return {k: v for k, v in out.items() if v}


def minimal_position(lay: Layout, labels=None, max_steps: int = 10_000) -> tuple[Layout, PlanarMap]:
    """Remove curve-curve bigons until none remain; curve 0 is the one moved first."""
    lay = _relabel_tokens(lay)
    pm = PlanarMap(lay, labels)
    for _ in range(max_steps):
        circ = pm.find_bigon()
        if circ is None:
            return lay, pm
        before, signed = len(pm.crossings), _signed_totals(pm)
        mover = min(pm.chords[e[1]].curve for e in circ.edges)
        lay = _relabel_tokens(push_bigon(lay, circ, pm, mover))
        pm = PlanarMap(lay, labels)
        # straightening the two chords next to the pushed arc may cancel more pairs
        removed = before - len(pm.crossings)
        assert removed >= 2 and removed % 2 == 0, "bigon push must remove crossings in pairs"
        assert _signed_totals(pm) == signed, "bigon push changed an algebraic intersection"
    raise RuntimeError("bigon removal did not terminate")


# ---------------------------------------------------------------------------
# Public surface


TIE_BREAKS = ("a_first", "b_first")


@dataclass
class Diagram:
    """Several multicurves on one surface sharing a merged slot order per side."""

    surface: SurfaceModel
    families: dict
    order: tuple

    def __post_init__(self):
        for name, M in self.families.items():
            if M.genus != self.surface.genus:
                raise ValueError(f"family {name} lives on genus {M.genus}")
        lays = [layout_of(self.families[name], tag=name) for name in self.order]
        self.layout = merge_layouts(lays)
        self.labels = []
        self.curve_index = []
        for name in self.order:
            for i in range(self.families[name].n_components):
                self.labels.append(name)
                self.curve_index.append((name, i))
        self.map = PlanarMap(self.layout, self.labels)

    @property
    def V(self) -> int:
        return self.map.n_vertices

    @property
    def E(self) -> int:
        return self.map.n_edges

    @property
    def F(self) -> int:
        return self.map.n_faces

    def euler_characteristic(self) -> int:
        return self.map.euler_characteristic()

    @property
    def n_crossings(self) -> int:
        return len(self.map.crossings)

    @property
    def faces(self):
        return self.map.faces

    def merged_chords(self) -> dict:
        """Per family, the chords in merged slot coordinates."""
        out = {name: [] for name in self.order}
        for rec in self.map.chords:
            name = self.labels[rec.curve]
            out[name].append(tuple(sorted((rec.p, rec.q))))
        return {k: sorted(v) for k, v in out.items()}

    @property
    def slot_counts(self) -> tuple:
        return tuple(self.map.n_side)


def make_diagram(genus: int, families: dict, order=None) -> Diagram:
    order = tuple(order) if order is not None else tuple(families)
    return Diagram(SurfaceModel(genus), dict(families), order)


def overlay(A: Multicurve, B: Multicurve, tie_break: str = "a_first") -> Diagram:
    if tie_break not in TIE_BREAKS:
        raise ValueError(f"tie_break must be one of {TIE_BREAKS}")
    order = ("A", "B") if tie_break == "a_first" else ("B", "A")
    return make_diagram(A.genus, {"A": A, "B": B}, order)


def _pair_layout(a: Multicurve, b: Multicurve) -> Layout:
    return merge_layouts([layout_of(a, "A"), layout_of(b, "B")])


def pair_intersection(a: Multicurve, b: Multicurve) -> int:
    """Minimal intersection number of two single curves."""
    lay = _pair_layout(a, b)
    if not any(lay.curves) or len(lay.curves) < 2:
        return 0
    crossings = PlanarMap(lay, ["A", "B"]).crossings
    if not crossings:
        return 0
    _, pm = minimal_position(lay, ["A", "B"])
    return len(pm.crossings)


def geometric_intersection(A: Multicurve, B: Multicurve) -> np.ndarray:
    """Minimal-position intersection counts, rows indexed by A's components."""
    check_multicurve(A)
    check_multicurve(B)
    out = np.zeros((A.n_components, B.n_components), dtype=np.int64)
    raw = overlay(A, B).map
    counts = raw.crossing_counts()
    alg = _algebraic_from_map(raw, A.n_components, B.n_components)
    for i in range(A.n_components):
        for j in range(B.n_components):
            c = counts.get((i, A.n_components + j), 0)
            if c == abs(alg[i, j]):
                out[i, j] = c
            else:
                out[i, j] = pair_intersection(A.component(i), B.component(j))
    return out


def _algebraic_from_map(pm: PlanarMap, na: int, nb: int) -> np.ndarray:
    out = np.zeros((na, nb), dtype=np.int64)
    for x, (c, d) in enumerate(pm.crossings):
        a, b = pm.chords[c].curve, pm.chords[d].curve
        if a > b:
            a, b = b, a
        if a < na <= b:
            out[a, b - na] += pm.crossing_sign(x, a)
    return out


def algebraic_intersection(A: Multicurve, B: Multicurve) -> np.ndarray:
    """Signed crossing counts with canonical orientations, rows indexed by A.

    A crossing counts ``+1`` when the B strand passes from the right of the
    A strand to its left.
    """
    pm = overlay(A, B).map
    return _algebraic_from_map(pm, A.n_components, B.n_components)


def crossing_matrix(A: Multicurve, B: Multicurve, tie_break: str = "a_first") -> np.ndarray:
    pm = overlay(A, B, tie_break).map
    counts = pm.crossing_counts()
    na = A.n_components
    out = np.zeros((na, B.n_components), dtype=np.int64)
    for (a, b), c in counts.items():
        if a < na <= b:
            out[a, b - na] = c
    return out


def complement_regions(M: Multicurve) -> list[Region]:
    check_multicurve(M)
    return PlanarMap(layout_of(M)).regions


def is_cut_system(M: Multicurve) -> bool:
    if M.n_components != M.genus:
        return False
    regions = complement_regions(M)
    if len(regions) != 1:
        return False
    (r,) = regions
    assert r.genus == 0 and r.n_boundary == 2 * M.genus, "single complementary region must be planar"
    return True


def is_isotopic(c1: Multicurve, c2: Multicurve) -> bool:
    """Isotopy test for two single curves given as one-component multicurves."""
    if c1.n_components != 1 or c2.n_components != 1:
        raise ValueError("is_isotopic compares single curves")
    h1, h2 = c1.homology_class(0), c2.homology_class(0)
    if not (np.array_equal(h1, h2) or np.array_equal(h1, -h2)):
        return False
    lay = _pair_layout(c1, c2)
    _, pm = minimal_position(lay, ["A", "B"])
    if pm.crossings:
        return False
    for reg in pm.regions:
        if reg.euler_characteristic == 0 and reg.genus == 0 and reg.n_boundary == 2:
            if {b[0] for b in reg.boundary} == {0, 1}:
                return True
    return False
