"""First homology of the 3-manifold presented by a pair of cut systems."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .multicurve import Multicurve
from .overlay import algebraic_intersection
from .snf import smith_normal_form


@dataclass(frozen=True)
class HomologyVerdict:
    """Invariant factors of H_1 and what they are consistent with.

    ``kind`` is ``"S3"`` when every factor is 1, ``"#S1xS2"`` when the factors
    are ones followed by ``k >= 1`` zeros, and ``"other"`` when torsion shows up.
    """

    factors: tuple

    @classmethod
    def from_matrix(cls, A) -> "HomologyVerdict":
        return cls(tuple(smith_normal_form(A)))

    @property
    def k(self) -> int:
        return sum(1 for f in self.factors if f == 0)

    @property
    def torsion(self) -> tuple:
        return tuple(f for f in self.factors if f > 1)

    @property
    def kind(self) -> str:
        if self.torsion:
            return "other"
        return "S3" if self.k == 0 else "#S1xS2"

    @property
    def is_s3(self) -> bool:
        return self.kind == "S3"

    def label(self) -> str:
        if self.kind == "S3":
            return "S3-homology"
        if self.kind == "#S1xS2":
            return f"#^{self.k} S1xS2-homology"
        parts = [f"Z/{t}" for t in self.torsion] + ["Z"] * self.k
        return "other: " + " + ".join(parts)

    def as_dict(self) -> dict:
        return {"factors": list(self.factors), "kind": self.kind, "k": self.k, "label": self.label()}


def direct_sum(*verdicts: HomologyVerdict) -> HomologyVerdict:
    """Verdict of a connected sum: invariant factors of the direct sum."""
    factors = [f for v in verdicts for f in v.factors]
    n = len(factors)
    diag = [[factors[i] if i == j else 0 for j in range(n)] for i in range(n)]
    return HomologyVerdict(tuple(smith_normal_form(diag)) if n else ())


def presentation_matrix(alpha: Multicurve, beta: Multicurve) -> np.ndarray:
    """Rows indexed by beta components, columns by alpha components."""
    return algebraic_intersection(beta, alpha)


def homology_of_pair(alpha: Multicurve, beta: Multicurve) -> HomologyVerdict:
    return HomologyVerdict.from_matrix(presentation_matrix(alpha, beta).tolist())
