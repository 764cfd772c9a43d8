"""Trisection diagrams: validation, connected sum and stabilization."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .heegaard import HeegaardDiagram, h1_invariants
from .multicurve import Multicurve
from .overlay import is_cut_system
from .primitivity import Budget, slide_search
from .surface import SurfaceModel

PAIRS = (("alpha", "beta"), ("beta", "gamma"), ("gamma", "alpha"))


@dataclass(frozen=True)
class TrisectionDiagram:
    alpha: Multicurve
    beta: Multicurve
    gamma: Multicurve

    def __post_init__(self):
        genera = {self.alpha.genus, self.beta.genus, self.gamma.genus}
        if len(genera) != 1:
            raise ValueError("the three families live on different surfaces")
        SurfaceModel(self.alpha.genus)  # rejects genus < 1
        for name in ("alpha", "beta", "gamma"):
            if not is_cut_system(getattr(self, name)):
                raise ValueError(f"{name} is not a cut system")

    @property
    def genus(self) -> int:
        return self.alpha.genus

    @property
    def surface(self) -> SurfaceModel:
        return SurfaceModel(self.genus)

    def family(self, name: str) -> Multicurve:
        return getattr(self, name)

    def heegaard(self, i: int) -> HeegaardDiagram:
        """The Heegaard diagram of the i-th pair (0: alpha-beta, 1: beta-gamma, 2: gamma-alpha)."""
        a, b = PAIRS[i]
        return HeegaardDiagram(self.family(a), self.family(b))

    def rotated(self) -> "TrisectionDiagram":
        return TrisectionDiagram(self.beta, self.gamma, self.alpha)


@dataclass
class TrisectionReport:
    genus: int
    verdicts: tuple  # one HomologyVerdict per pair, in PAIRS order
    certificates: dict = field(default_factory=dict)
    search_status: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    @property
    def k(self) -> Optional[tuple]:
        if any(v.torsion for v in self.verdicts):
            return None
        return tuple(v.k for v in self.verdicts)

    @property
    def balanced(self) -> bool:
        return self.k is not None and len(set(self.k)) == 1

    @property
    def euler_characteristic(self) -> Optional[int]:
        """Of the closed 4-manifold, 2 + g - k1 - k2 - k3, when the k_i are defined."""
        return None if self.k is None else 2 + self.genus - sum(self.k)

    def signature(self) -> str:
        if self.k is None:
            return f"({self.genus}; ?)"
        return f"({self.genus};{','.join(map(str, self.k))})"

    def as_dict(self) -> dict:
        return {
            "genus": self.genus,
            "k": list(self.k) if self.k is not None else None,
            "balanced": self.balanced,
            "verdicts": [v.as_dict() for v in self.verdicts],
            "searches": dict(self.search_status),
            "warnings": list(self.warnings),
        }


def validate_trisection(
    T: TrisectionDiagram, budget: Optional[Budget] = None, *, workers: int = 1
) -> TrisectionReport:
    """Homology verdicts of the three pairs, plus pseudo-standardness searches when ``budget`` is given."""
    verdicts = tuple(h1_invariants(T.heegaard(i)) for i in range(3))
    report = TrisectionReport(T.genus, verdicts)
    for (a, b), v in zip(PAIRS, verdicts):
        if v.torsion:
            report.warnings.append(f"({a},{b}) has torsion {v.label()}: not a trisection diagram")
        elif v.k > T.genus:
            report.warnings.append(f"({a},{b}) gives k={v.k} > g={T.genus}")
    if budget is not None:
        for (a, b), v in zip(PAIRS, verdicts):
            res = slide_search(
                T.family(b), T.family(a), "pseudo", budget, side=f"{a}-{b}", workers=workers
            )
            report.search_status[f"{a}-{b}"] = res.status
            if res.certified:
                report.certificates[f"{a}-{b}"] = res.certificates[0]
                if res.k1 != v.k:
                    report.warnings.append(f"({a},{b}) certificate k={res.k1} disagrees with homology")
    return report


def embed(M: Multicurve, genus: int, handle_offset: int) -> Multicurve:
    """Move ``M`` onto handles ``handle_offset ..`` of a genus ``genus`` polygon."""
    shift = 4 * handle_offset
    return Multicurve(
        genus, [((p.side + shift, p.slot), (q.side + shift, q.slot)) for p, q in M.chords]
    )


def connected_sum_multicurves(M1: Multicurve, M2: Multicurve) -> Multicurve:
    g = M1.genus + M2.genus
    return Multicurve(g, embed(M1, g, 0).chords + embed(M2, g, M1.genus).chords)


def connected_sum(T1: TrisectionDiagram, T2: TrisectionDiagram) -> TrisectionDiagram:
    return TrisectionDiagram(
        connected_sum_multicurves(T1.alpha, T2.alpha),
        connected_sum_multicurves(T1.beta, T2.beta),
        connected_sum_multicurves(T1.gamma, T2.gamma),
    )


def genus_one_piece(sector: int) -> TrisectionDiagram:
    """Genus-1 diagram whose ``sector``-th pair is parallel and the other two dual."""
    from .constructions import standard_alpha, standard_beta

    a, b = standard_alpha(1), standard_beta(1)
    if sector == 1:
        return TrisectionDiagram(a, a, b)
    if sector == 2:
        return TrisectionDiagram(b, a, a)
    if sector == 3:
        return TrisectionDiagram(a, b, a)
    raise ValueError("sector must be 1, 2 or 3")


def stabilize(T: TrisectionDiagram, sector: int) -> TrisectionDiagram:
    """Sector-wise stabilization: connected sum with :func:`genus_one_piece`."""
    return connected_sum(T, genus_one_piece(sector))
