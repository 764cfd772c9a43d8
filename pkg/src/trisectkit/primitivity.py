"""Primitive and pseudo-primitive positions of a surgery link, and the slide search.

A cut system ``L`` is primitive with respect to a disk system ``Delta`` of a
handlebody when the geometric intersection matrix is a permutation matrix.  It
is pseudo-primitive when the disks can be matched bijectively with the
components of ``L`` so that every pair is either geometrically dual (and the
two curves miss everything else in the other family) or isotopic.  The slide
search looks for handle slides of ``L`` and of ``Delta`` reaching such a
position and returns a replayable certificate.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .homology import HomologyVerdict, homology_of_pair
from .multicurve import Multicurve, canonical_encoding, reduce
from .overlay import (
    _algebraic_from_map,
    is_cut_system,
    is_isotopic,
    overlay,
    pair_intersection,
)
from .slides import SlideArc, SlideError, band_slide, enumerate_slide_arcs

log = logging.getLogger(__name__)

MODES = ("primitive", "pseudo")


@dataclass(frozen=True)
class Budget:
    depth: int = 6
    states: int = 100_000
    arc_bound: int = 2


DEFAULT_BUDGET = Budget()


# ---------------------------------------------------------------------------
# Predicates


def _is_permutation(M: np.ndarray) -> bool:
    if M.shape[0] != M.shape[1]:
        return False
    return bool(
        ((M == 0) | (M == 1)).all()
        and (M.sum(axis=0) == 1).all()
        and (M.sum(axis=1) == 1).all()
    )


def _intersections(Delta: Multicurve, L: Multicurve):
    """Algebraic matrix plus a lazily refined geometric matrix, rows indexed by Delta."""
    pm = overlay(Delta, L).map
    nd, nl = Delta.n_components, L.n_components
    alg = _algebraic_from_map(pm, nd, nl)
    counts = pm.crossing_counts()
    raw = np.zeros((nd, nl), dtype=np.int64)
    for (a, b), c in counts.items():
        if a < nd <= b:
            raw[a, b - nd] = c
    return alg, raw


def _geometric_entry(Delta, L, alg, raw, d, l, cache):
    if (d, l) not in cache:
        if raw[d, l] == abs(alg[d, l]):
            cache[(d, l)] = int(raw[d, l])
        else:
            cache[(d, l)] = pair_intersection(Delta.component(d), L.component(l))
    return cache[(d, l)]


def primitive_matching(L: Multicurve, Delta: Multicurve) -> Optional[tuple]:
    """Dual pairs ``(disk, component, "dual")`` when ``L`` is primitive, else ``None``."""
    if L.n_components != Delta.n_components:
        return None
    alg, raw = _intersections(Delta, L)
    if not _is_permutation(np.abs(alg)):
        return None
    cache = {}
    G = np.array(
        [
            [_geometric_entry(Delta, L, alg, raw, d, l, cache) for l in range(L.n_components)]
            for d in range(Delta.n_components)
        ]
    )
    if not _is_permutation(G):
        return None
    return tuple((d, int(np.argmax(G[d])), "dual") for d in range(G.shape[0]))


def pseudo_matching(L: Multicurve, Delta: Multicurve) -> Optional[tuple]:
    """A bijective matching of disks to components, each pair dual or isotopic.

    Returns ``((disk, component, "dual" | "isotopic"), ...)`` in disk order, the
    lexicographically first valid matching, or ``None``.
    """
    n = Delta.n_components
    if L.n_components != n:
        return None
    alg, raw = _intersections(Delta, L)
    A = np.abs(alg)
    if (A > 1).any() or (A.sum(axis=0) > 1).any() or (A.sum(axis=1) > 1).any():
        return None
    cache = {}
    G = np.array(
        [[_geometric_entry(Delta, L, alg, raw, d, l, cache) for l in range(n)] for d in range(n)]
    )
    rel = [[None] * n for _ in range(n)]
    for d in range(n):
        for l in range(n):
            if G[d, l] == 1 and G[d].sum() == 1 and G[:, l].sum() == 1:
                rel[d][l] = "dual"
            elif G[d].sum() == 0 and G[:, l].sum() == 0:
                if is_isotopic(Delta.component(d), L.component(l)):
                    rel[d][l] = "isotopic"
    for perm in itertools.permutations(range(n)):
        if all(rel[d][perm[d]] for d in range(n)):
            return tuple((d, perm[d], rel[d][perm[d]]) for d in range(n))
    return None


def is_primitive_wrt(L: Multicurve, Delta: Multicurve) -> bool:
    return primitive_matching(L, Delta) is not None


def is_pseudo_primitive_wrt(L: Multicurve, Delta: Multicurve) -> tuple[bool, int]:
    m = pseudo_matching(L, Delta)
    if m is None:
        return False, 0
    return True, sum(1 for _, _, kind in m if kind == "isotopic")


def _goal(mode: str, L: Multicurve, Delta: Multicurve) -> Optional[tuple]:
    if mode == "primitive":
        return primitive_matching(L, Delta)
    return pseudo_matching(L, Delta)


# ---------------------------------------------------------------------------
# Certificates and verdicts


@dataclass(frozen=True)
class SlideStep:
    family: str  # "L" or "Delta"
    i: int
    j: int
    arc: SlideArc


@dataclass(frozen=True)
class SlideCertificate:
    side: str  # "H1" or "H2"
    mode: str
    initial_L: bytes
    initial_delta: bytes
    steps: tuple
    matching: tuple
    k: int

    @property
    def families_slid(self) -> frozenset:
        return frozenset(s.family for s in self.steps)

    @property
    def depth(self) -> int:
        return len(self.steps)


@dataclass
class Verdict:
    """``certified`` and ``refuted`` are final; ``exhausted`` is inconclusive."""

    status: str
    certificates: tuple = ()
    obstruction: tuple = ()
    stats: dict = field(default_factory=dict)
    k1: Optional[int] = None
    k2: Optional[int] = None

    @property
    def k(self) -> Optional[int]:
        if self.k1 is None:
            return None
        return self.k1 + (self.k2 or 0)

    @property
    def certified(self) -> bool:
        return self.status == "certified"

    @property
    def refuted(self) -> bool:
        return self.status == "refuted"

    @property
    def exhausted(self) -> bool:
        return self.status == "exhausted"


# ---------------------------------------------------------------------------
# Search


def _successors(state: tuple, arc_bound: int) -> list:
    """All single slides of either family, in a fixed order."""
    L, D = state
    out = []
    for fam, M in (("L", L), ("Delta", D)):
        n = M.n_components
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                for arc in enumerate_slide_arcs(M, i, j, arc_bound):
                    try:
                        child = band_slide(M, i, j, arc)
                    except SlideError:  # pragma: no cover - enumerated arcs are valid
                        continue
                    nxt = (child, D) if fam == "L" else (L, child)
                    out.append((SlideStep(fam, i, j, arc), nxt))
    return out


def _expand_task(args):
    state, arc_bound = args
    return _successors(state, arc_bound)


def _goal_task(args):
    mode, state = args
    return _goal(mode, state[0], state[1])


def _key(state) -> tuple:
    return (state[0].encode(), state[1].encode())


def _map(fn, items, workers: int):
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _first_goal(mode, keys, states, workers):
    if workers <= 1:
        for key in keys:
            hit = _goal(mode, *states[key])
            if hit is not None:
                return key, hit
        return None
    chunk = 4 * workers
    for start in range(0, len(keys), chunk):
        block = keys[start : start + chunk]
        hits = _map(_goal_task, [(mode, states[k]) for k in block], workers)
        for key, hit in zip(block, hits):
            if hit is not None:
                return key, hit
    return None


def homology_obstruction(L: Multicurve, Delta: Multicurve, mode: str) -> Optional[HomologyVerdict]:
    """The H_1 verdict of (Delta, L) when it rules the goal out, else ``None``."""
    hv = homology_of_pair(Delta, L)
    if mode == "primitive" and not hv.is_s3:
        return hv
    if mode == "pseudo" and hv.torsion:
        return hv
    return None


def slide_search(
    L: Multicurve,
    Delta: Multicurve,
    mode: str = "primitive",
    budget: Budget = DEFAULT_BUDGET,
    *,
    side: str = "H1",
    workers: int = 1,
) -> Verdict:
    """Breadth-first search over handle slides of ``L`` and ``Delta``.

    States are pairs of reduced multicurves keyed by their encodings.  Each
    depth is generated from the previous one in key order and its new states
    are tested in key order, so the answer does not depend on ``workers``.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if not (is_cut_system(L) and is_cut_system(Delta)):
        raise ValueError("slide search needs two cut systems")
    L0, D0 = reduce(L), reduce(Delta)
    obstruction = homology_obstruction(L0, D0, mode)
    if obstruction is not None:
        return Verdict("refuted", obstruction=(obstruction,), stats={"side": side})

    root = (L0, D0)
    root_key = _key(root)
    states = {root_key: root}
    parent: dict = {root_key: None}
    stats = {"side": side, "states": 0, "depth_reached": 0, "frontier": 0, "truncated": False}

    def certify(key, matching):
        steps = []
        while parent[key] is not None:
            prev, step = parent[key]
            steps.append(step)
            key = prev
        steps.reverse()
        k = sum(1 for _, _, kind in matching if kind == "isotopic")
        cert = SlideCertificate(
            side, mode, L0.encode(), D0.encode(), tuple(steps), tuple(matching), k
        )
        return Verdict("certified", certificates=(cert,), stats=stats, k1=k)

    if budget.states < 1:
        return Verdict("exhausted", stats=stats)
    stats["states"] = 1
    hit = _first_goal(mode, [root_key], states, workers)
    if hit is not None:
        return certify(*hit)

    level = [root_key]
    for depth in range(1, budget.depth + 1):
        expansions = _map(_expand_task, [(states[k], budget.arc_bound) for k in level], workers)
        new = []
        for pkey, children in zip(level, expansions):
            for step, child in children:
                ckey = _key(child)
                if ckey in states:
                    continue
                if len(states) >= budget.states:
                    stats["truncated"] = True
                    break
                states[ckey] = child
                parent[ckey] = (pkey, step)
                new.append(ckey)
            if stats["truncated"]:
                break
        new.sort()
        stats["states"] = len(states)
        stats["depth_reached"] = depth
        stats["frontier"] = len(new)
        log.debug("depth %d: %d new states", depth, len(new))
        hit = _first_goal(mode, new, states, workers)
        if hit is not None:
            return certify(*hit)
        if stats["truncated"] or not new:
            break
        level = new
    return Verdict("exhausted", stats=stats)


# ---------------------------------------------------------------------------
# Replay


@dataclass(frozen=True)
class ReplayReport:
    ok: bool
    message: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def replay_certificate(
    cert: SlideCertificate,
    L: Optional[Multicurve] = None,
    Delta: Optional[Multicurve] = None,
) -> ReplayReport:
    """Re-run every slide of ``cert`` and re-check every invariant and the goal."""
    if L is not None and canonical_encoding(L) != cert.initial_L:
        return ReplayReport(False, "initial L does not match the certificate")
    if Delta is not None and canonical_encoding(Delta) != cert.initial_delta:
        return ReplayReport(False, "initial disk system does not match the certificate")
    try:
        cur = {"L": Multicurve.decode(cert.initial_L), "Delta": Multicurve.decode(cert.initial_delta)}
    except ValueError as exc:
        return ReplayReport(False, f"undecodable initial state: {exc}")
    for fam in cur:
        if not is_cut_system(cur[fam]):
            return ReplayReport(False, f"initial {fam} is not a cut system")
    for n, step in enumerate(cert.steps):
        if step.family not in cur:
            return ReplayReport(False, f"step {n}: unknown family {step.family!r}")
        try:
            cur[step.family] = band_slide(cur[step.family], step.i, step.j, step.arc)
        except (SlideError, ValueError) as exc:
            return ReplayReport(False, f"step {n}: {exc}")
        if not is_cut_system(cur[step.family]):
            return ReplayReport(False, f"step {n}: result is not a cut system")
    if cert.mode not in MODES:
        return ReplayReport(False, f"unknown mode {cert.mode!r}")
    matching = _goal(cert.mode, cur["L"], cur["Delta"])
    if matching is None:
        return ReplayReport(False, "final state does not satisfy the goal predicate")
    if tuple(matching) != tuple(cert.matching):
        return ReplayReport(False, "final matching differs from the recorded one")
    k = sum(1 for _, _, kind in matching if kind == "isotopic")
    if k != cert.k:
        return ReplayReport(False, f"recorded k={cert.k} but replay gives k={k}")
    return ReplayReport(True)


# ---------------------------------------------------------------------------
# dsp / dspp


def _double_check(alpha, beta, L, mode, budget, workers) -> Verdict:
    budget = budget or DEFAULT_BUDGET
    for name, M in (("alpha", alpha), ("beta", beta), ("L", L)):
        if not is_cut_system(M):
            raise ValueError(f"{name} is not a cut system")
    obstructions = []
    for Delta in (alpha, beta):
        ob = homology_obstruction(L, Delta, mode)
        if ob is not None:
            obstructions.append(ob)
    if obstructions:
        return Verdict("refuted", obstruction=tuple(obstructions))
    v1 = slide_search(L, alpha, mode, budget, side="H1", workers=workers)
    v2 = slide_search(L, beta, mode, budget, side="H2", workers=workers)
    stats = {"H1": v1.stats, "H2": v2.stats}
    certs = v1.certificates + v2.certificates
    if v1.certified and v2.certified:
        return Verdict("certified", certificates=certs, stats=stats, k1=v1.k1, k2=v2.k1)
    return Verdict("exhausted", certificates=certs, stats=stats)


def check_dsp(alpha, beta, L, budget: Optional[Budget] = None, *, workers: int = 1) -> Verdict:
    """Slide-primitive on both handlebodies; certified means surgery on L gives S^3."""
    return _double_check(alpha, beta, L, "primitive", budget, workers)


def check_dspp(alpha, beta, L, budget: Optional[Budget] = None, *, workers: int = 1) -> Verdict:
    """Slide-pseudo-primitive on both sides; certified reports k1, k2 and k = k1 + k2."""
    return _double_check(alpha, beta, L, "pseudo", budget, workers)
