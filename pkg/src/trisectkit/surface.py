"""Closed orientable surfaces as a 4g-gon with the standard side pairing.

Sides are numbered ``0 .. 4g-1`` counterclockwise.  Side ``4i`` is glued to
side ``4i+2`` and side ``4i+1`` to side ``4i+3``, both reversing orientation,
which realises the word ``a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1``.

Points on a side are *slots*: ordinals counted in the counterclockwise
direction.  With ``n`` slots on a side pair, slot ``t`` on one side is the same
surface point as slot ``n-1-t`` on its partner.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


class BoundaryPoint(NamedTuple):
    side: int
    slot: int

    def __str__(self) -> str:
        return f"({self.side},{self.slot})"


def side_pair(side: int) -> int:
    """Index ``0 .. 2g-1`` of the skeleton edge a side belongs to."""
    return 2 * (side // 4) + (side % 4) % 2


def lower_side(pair: int) -> int:
    return 4 * (pair // 2) + pair % 2


def upper_side(pair: int) -> int:
    return lower_side(pair) + 2


def is_lower(side: int) -> bool:
    return side % 4 < 2


def partner_side(side: int) -> int:
    base = side - side % 4
    return base + (side % 4 + 2) % 4


@dataclass(frozen=True)
class SurfaceModel:
    genus: int

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 1:
            raise ValueError(
                f"genus must be a positive integer, got {self.genus!r}; "
                "the sphere carries no cut systems"
            )

    @property
    def n_sides(self) -> int:
        return 4 * self.genus

    @property
    def sides(self) -> range:
        return range(self.n_sides)

    @property
    def pairing(self) -> dict[int, int]:
        return {s: partner_side(s) for s in self.sides}

    def partner(self, side: int) -> int:
        return partner_side(side)

    def identify(self, point: BoundaryPoint, slot_counts) -> BoundaryPoint:
        """The partner point of ``point`` when the side carries ``slot_counts[side]`` slots."""
        n = slot_counts[point.side]
        return BoundaryPoint(partner_side(point.side), n - 1 - point.slot)

    def euler_characteristic(self) -> int:
        # one vertex, 2g edges, one face
        return 1 - 2 * self.genus + 1


def build_surface(g: int) -> SurfaceModel:
    return SurfaceModel(g)
