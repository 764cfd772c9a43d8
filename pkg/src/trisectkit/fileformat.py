"""Text format for diagrams and slide certificates.

A diagram file::

    trisectkit-diagram version 1
    genus 2
    slots 1 1 1 1 1 1 1 1
    family alpha oriented
      (0,0)-(2,0)
      (4,0)-(6,0)
    end
    family beta oriented
      (1,0)-(3,0)
      (5,0)-(7,0)
    end

``slots`` lists, per side, the number of chord endpoints summed over all
families.  Inside a block slots are per-family labels; only their order on
each side matters.  An ``oriented`` block lists every chord entry-first and
each component in one consistent direction; ``unoriented`` blocks may list
either end first.  The family names decide the value: one block is a
multicurve, ``alpha beta`` a Heegaard diagram, ``alpha beta L`` a surgery
instance (``L`` carries ``framing surface``), ``alpha beta gamma`` a
trisection diagram.  ``#`` starts a comment.  The grammar is in
``docs/fileformat.md``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .heegaard import HeegaardDiagram, SurgeryInstance
from .multicurve import Multicurve, validate_multicurve, _normalize_chord
from .primitivity import SlideCertificate, SlideStep
from .slides import SlideArc
from .surface import BoundaryPoint, SurfaceModel
from .trisection import TrisectionDiagram

VERSION = 1
DIAGRAM_MAGIC = "trisectkit-diagram"
CERT_MAGIC = "trisectkit-certificates"

_CHORD = re.compile(
    r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*-\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)"
)
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

KINDS = {
    ("alpha", "beta"): "heegaard",
    ("alpha", "beta", "L"): "surgery",
    ("alpha", "beta", "gamma"): "trisection",
}


class FormatError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        where = f"line {line}, col {col}: " if line else ""
        super().__init__(where + message)
        self.message = message
        self.line = line
        self.col = col


@dataclass
class FamilyBlock:
    name: str
    oriented: bool
    framing: Optional[str]
    chords: list  # raw (p, q) pairs as written
    locations: list = field(default_factory=list)  # (line, col) per chord
    line: int = 0

    def multicurve(self, genus: int) -> Multicurve:
        return Multicurve(genus, self.chords)


@dataclass
class DiagramFile:
    version: int
    genus: int
    slots: tuple
    families: list

    @property
    def kind(self) -> str:
        names = tuple(f.name for f in self.families)
        if len(names) == 1:
            return "multicurve"
        if names not in KINDS:
            raise FormatError(f"unrecognised family set {' '.join(names)}")
        return KINDS[names]

    def to_value(self):
        curves = {f.name: f.multicurve(self.genus) for f in self.families}
        kind = self.kind
        try:
            if kind == "multicurve":
                return next(iter(curves.values()))
            if kind == "heegaard":
                return HeegaardDiagram(curves["alpha"], curves["beta"])
            if kind == "surgery":
                return SurgeryInstance(HeegaardDiagram(curves["alpha"], curves["beta"]), curves["L"])
            return TrisectionDiagram(curves["alpha"], curves["beta"], curves["gamma"])
        except ValueError as exc:
            raise FormatError(str(exc), self.families[0].line, 1) from None


# ---------------------------------------------------------------------------
# Emission


def _families_of(value) -> list[tuple[str, Multicurve]]:
    if isinstance(value, Multicurve):
        return [("curves", value)]
    if isinstance(value, HeegaardDiagram):
        return [("alpha", value.alpha), ("beta", value.beta)]
    if isinstance(value, SurgeryInstance):
        return [("alpha", value.alpha), ("beta", value.beta), ("L", value.L)]
    if isinstance(value, TrisectionDiagram):
        return [("alpha", value.alpha), ("beta", value.beta), ("gamma", value.gamma)]
    raise TypeError(f"cannot emit {type(value).__name__}")


def _pt(p: BoundaryPoint) -> str:
    return f"({p.side},{p.slot})"


def _family_lines(name: str, M: Multicurve) -> list[str]:
    head = f"family {name} oriented"
    if name == "L":
        head += " framing surface"
    out = [head]
    for comp in M.traced:
        out.append("  " + "  ".join(f"{_pt(p)}-{_pt(q)}" for p, q in comp))
    out.append("end")
    return out


def emit(value) -> str:
    fams = _families_of(value)
    genus = fams[0][1].genus
    slots = [0] * (4 * genus)
    for _, M in fams:
        for s, n in enumerate(M.slot_counts):
            slots[s] += n
    lines = [f"{DIAGRAM_MAGIC} version {VERSION}", f"genus {genus}", "slots " + " ".join(map(str, slots))]
    for name, M in fams:
        lines += _family_lines(name, M)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Parsing


def _lines(text: str):
    """Yield (line number, stripped-of-comment text, indent column) for non-blank lines."""
    for n, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            yield n, body, len(body) - len(body.lstrip()) + 1


def _expect_header(n: int, body: str, col: int, magic: str) -> int:
    words = body.split()
    if len(words) != 3 or words[0] != magic or words[1] != "version":
        raise FormatError(f"expected '{magic} version N'", n, col)
    try:
        version = int(words[2])
    except ValueError:
        raise FormatError(f"bad version {words[2]!r}", n, col) from None
    if version != VERSION:
        raise FormatError(f"unsupported version {version} (this reader knows {VERSION})", n, col)
    return version


def _parse_chords(n: int, body: str, col0: int):
    chords, locs, pos = [], [], 0
    while pos < len(body):
        if body[pos].isspace():
            pos += 1
            continue
        m = _CHORD.match(body, pos)
        if not m:
            raise FormatError("expected a chord '(side,slot)-(side,slot)'", n, pos + 1)
        a, b, c, d = map(int, m.groups())
        chords.append(((a, b), (c, d)))
        locs.append((n, pos + 1))
        pos = m.end()
    return chords, locs


def _parse_family_header(n: int, body: str, col: int) -> FamilyBlock:
    words = body.split()
    if len(words) < 3 or not _NAME.fullmatch(words[1]):
        raise FormatError("expected 'family NAME oriented|unoriented [framing surface]'", n, col)
    if words[2] not in ("oriented", "unoriented"):
        raise FormatError(f"expected 'oriented' or 'unoriented', got {words[2]!r}", n, col)
    framing = None
    rest = words[3:]
    if rest:
        if len(rest) != 2 or rest[0] != "framing":
            raise FormatError("trailing text after family header", n, col)
        if rest[1] != "surface":
            raise FormatError(f"unsupported framing {rest[1]!r}; only 'surface' is meaningful", n, col)
        framing = rest[1]
    return FamilyBlock(words[1], words[2] == "oriented", framing, [], [], n)


def _check_family(genus: int, fam: FamilyBlock) -> Multicurve:
    """Multicurve invariants with the offending chords located in the source."""
    where = {}
    for chord, loc in zip(fam.chords, fam.locations):
        for p in chord:
            if not 0 <= p[0] < 4 * genus:
                raise FormatError(f"side {p[0]} out of range for genus {genus}", *loc)
            if p[1] < 0:
                raise FormatError(f"negative slot {p[1]}", *loc)
    M = fam.multicurve(genus)
    # map canonical chords back to source locations, mirroring Multicurve's renumbering
    labels: dict = {}
    for c in fam.chords:
        for s, t in c:
            labels.setdefault(s, set()).add(t)
    rank = {s: {t: i for i, t in enumerate(sorted(ts))} for s, ts in labels.items()}
    for chord, loc in zip(fam.chords, fam.locations):
        key = _normalize_chord(*[(s, rank[s][t]) for s, t in chord])
        where.setdefault(key, (chord, loc))
    seen = set()
    for chord, loc in zip(fam.chords, fam.locations):
        pts = [(s, rank[s][t]) for s, t in chord]
        if pts[0] == pts[1]:
            raise FormatError(f"degenerate chord {_fmt(chord)}", *loc)
        for p in chord:
            if p in seen:
                raise FormatError(f"point {p} is an endpoint of two chords", *loc)
        seen.update(chord)
    v = validate_multicurve(SurfaceModel(genus), M)
    if v is not None:
        src = [where.get(c) for c in v.chords]
        loc = src[-1][1] if src and src[-1] else (fam.line, 1)
        if v.invariant == "laminarity" and all(src):
            raise FormatError(
                f"in family {fam.name}: chords {_fmt(src[0][0])} and {_fmt(src[1][0])} cross", *loc
            )
        written = ", ".join(_fmt(s[0]) for s in src if s)
        raise FormatError(f"in family {fam.name}: {v.invariant} violation at {written}: {v.message}", *loc)
    if fam.oriented:
        _check_orientation(fam, M, rank)
    return M


def _fmt(chord) -> str:
    return "-".join(f"({s},{t})" for s, t in chord)


def _check_orientation(fam: FamilyBlock, M: Multicurve, rank) -> None:
    direction = {}
    for comp_idx, comp in enumerate(M.traced):
        for entry, exit_ in comp:
            direction[(entry, exit_)] = (comp_idx, 1)
            direction[(exit_, entry)] = (comp_idx, -1)
    seen_sign: dict = {}
    for chord, loc in zip(fam.chords, fam.locations):
        p, q = (BoundaryPoint(s, rank[s][t]) for s, t in chord)
        comp_idx, sign = direction[(p, q)]
        if seen_sign.setdefault(comp_idx, sign) != sign:
            raise FormatError(
                f"in family {fam.name}: chord {_fmt(chord)} runs against its component's orientation",
                *loc,
            )


def parse_file(text: str) -> DiagramFile:
    it = iter(_lines(text))
    try:
        n, body, col = next(it)
    except StopIteration:
        raise FormatError("empty file") from None
    version = _expect_header(n, body, col, DIAGRAM_MAGIC)
    genus, slots, families, fam = None, None, [], None
    for n, body, col in it:
        words = body.split()
        if fam is not None:
            if words == ["end"]:
                families.append(fam)
                fam = None
            else:
                chords, locs = _parse_chords(n, body, col)
                fam.chords += chords
                fam.locations += locs
            continue
        if words[0] == "genus":
            if genus is not None or len(words) != 2 or not words[1].isdigit():
                raise FormatError("expected a single 'genus N' line", n, col)
            genus = int(words[1])
            if genus < 1:
                raise FormatError("genus must be at least 1", n, col)
        elif words[0] == "slots":
            if genus is None:
                raise FormatError("'slots' must follow 'genus'", n, col)
            try:
                slots = tuple(int(w) for w in words[1:])
            except ValueError:
                raise FormatError("slot counts must be integers", n, col) from None
            if len(slots) != 4 * genus:
                raise FormatError(f"expected {4 * genus} slot counts, got {len(slots)}", n, col)
        elif words[0] == "family":
            if genus is None:
                raise FormatError("'family' before 'genus'", n, col)
            fam = _parse_family_header(n, body, col)
            if any(f.name == fam.name for f in families):
                raise FormatError(f"duplicate family {fam.name!r}", n, col)
        else:
            raise FormatError(f"unexpected {words[0]!r}", n, col)
    if fam is not None:
        raise FormatError(f"family {fam.name!r} is missing its 'end'", fam.line, 1)
    if genus is None:
        raise FormatError("missing 'genus' line")
    if not families:
        raise FormatError("no family blocks")
    totals = [0] * (4 * genus)
    for f in families:
        M = _check_family(genus, f)
        for s, c in enumerate(M.slot_counts):
            totals[s] += c
    if slots is not None and tuple(totals) != slots:
        raise FormatError(f"header slot counts {list(slots)} do not match the chords {totals}")
    df = DiagramFile(version, genus, tuple(totals), families)
    df.kind  # raises on an unknown family set
    return df


def parse(text: str):
    """Parse a diagram file into a Multicurve, HeegaardDiagram, SurgeryInstance or TrisectionDiagram."""
    return parse_file(text).to_value()


# ---------------------------------------------------------------------------
# Certificates


def emit_certificates(certs) -> str:
    lines = [f"{CERT_MAGIC} version {VERSION}"]
    for cert in certs:
        L = Multicurve.decode(cert.initial_L)
        D = Multicurve.decode(cert.initial_delta)
        lines += [
            "certificate",
            f"genus {L.genus}",
            f"side {cert.side}",
            f"mode {cert.mode}",
            f"k {cert.k}",
        ]
        lines += _family_lines("L", L)
        lines += _family_lines("Delta", D)
        for st in cert.steps:
            lines.append(f"step {st.family} {st.i} {st.j} {st.arc.encode()}")
        for d, l, kind in cert.matching:
            lines.append(f"match {d} {l} {kind}")
        lines.append("endcertificate")
    return "\n".join(lines) + "\n"


def parse_certificates(text: str) -> list[SlideCertificate]:
    it = iter(_lines(text))
    try:
        n, body, col = next(it)
    except StopIteration:
        raise FormatError("empty file") from None
    _expect_header(n, body, col, CERT_MAGIC)
    certs, cur, fam = [], None, None
    for n, body, col in it:
        words = body.split()
        if fam is not None:
            if words == ["end"]:
                cur["families"][fam.name] = fam
                fam = None
            else:
                chords, locs = _parse_chords(n, body, col)
                fam.chords += chords
                fam.locations += locs
            continue
        if cur is None:
            if words != ["certificate"]:
                raise FormatError("expected 'certificate'", n, col)
            cur = {"families": {}, "steps": [], "match": [], "line": n}
            continue
        key = words[0]
        try:
            if key in ("genus", "k") and len(words) == 2:
                cur[key] = int(words[1])
            elif key in ("side", "mode") and len(words) == 2:
                cur[key] = words[1]
            elif key == "family":
                fam = _parse_family_header(n, body, col)
            elif key == "step" and len(words) == 5:
                cur["steps"].append(
                    SlideStep(words[1], int(words[2]), int(words[3]), SlideArc.decode(words[4]))
                )
            elif key == "match" and len(words) == 4:
                cur["match"].append((int(words[1]), int(words[2]), words[3]))
            elif words == ["endcertificate"]:
                certs.append(_finish_certificate(cur))
                cur = None
            else:
                raise FormatError(f"unexpected {body.strip()!r}", n, col)
        except (ValueError, IndexError) as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"malformed {key!r} line: {exc}", n, col) from None
    if cur is not None or fam is not None:
        raise FormatError("certificate is missing 'endcertificate'")
    return certs


def _finish_certificate(cur) -> SlideCertificate:
    for key in ("genus", "side", "mode", "k"):
        if key not in cur:
            raise FormatError(f"certificate lacks a {key!r} line", cur["line"], 1)
    fams = cur["families"]
    if set(fams) != {"L", "Delta"}:
        raise FormatError("certificate needs families L and Delta", cur["line"], 1)
    g = cur["genus"]
    L = _check_family(g, fams["L"])
    D = _check_family(g, fams["Delta"])
    return SlideCertificate(
        cur["side"], cur["mode"], L.encode(), D.encode(), tuple(cur["steps"]), tuple(cur["match"]), cur["k"]
    )
