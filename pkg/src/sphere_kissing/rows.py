"""Why three rows of chimneys: the construction for other row counts.

With ``k`` rows the cylinder is the quotient by ``(1, k)``, the meridian has
length ``m_k = sqrt(1 + 3k^2)``, and a neighbouring-pair belt matches it when
``4 + 2*pi*r = m_k``.  The construction needs that radius to be positive,
below 1 (disjoint discs) and below the mid-gap clearance ``h_k = sqrt(3)/m_k``
(straight meridians exist).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .exact import ExactLength
from .geodesics import belt_shapes
from .lattice import Chimney, axial_spacing, translation
from .planar import convex_hull, hull_perimeter
from .surface import default_radius, meridian_length
from .taut import CorridorError, Disc, taut_periodic_curve


@dataclass
class RowFeasibility:
    k: int
    m: ExactLength
    r: ExactLength
    h: ExactLength
    obstructions: list[str] = field(default_factory=list)
    taut_meridian: Optional[float] = None
    shorter_belts: int = 0

    @property
    def feasible(self) -> bool:
        return not self.obstructions

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "m": str(self.m),
            "m_approx": float(self.m),
            "r": str(self.r),
            "r_approx": float(self.r),
            "h": str(self.h),
            "h_approx": float(self.h),
            "feasible": self.feasible,
            "obstructions": list(self.obstructions),
            "shorter_belts": self.shorter_belts,
            "taut_meridian": self.taut_meridian,
        }


def _taut_meridian_witness(k: int, r: ExactLength) -> Optional[float]:
    """Length of the shortest winding-once curve through a gap of the infinite k-row cylinder."""
    w = translation(k)
    m = math.sqrt(w.squared_length())
    h = float(axial_spacing(k))
    rf = float(r)
    discs = []
    reach = int(2 * rf / h) + 2
    for s in range(-reach, reach + 2):
        y = (2 * s - 1) * h
        if abs(y) >= 2 * rf:
            continue
        x = (Chimney(s).lift().dot(w) / m) % m
        discs.append(Disc(x, y, +1 if s <= 0 else -1, s))
    try:
        return float(taut_periodic_curve(discs, m, rf))
    except CorridorError:
        return None


def row_feasibility(k: int) -> RowFeasibility:
    if k < 1 or k % 2 == 0:
        raise ValueError(f"k={k}: (1, {k}) is not a lattice translation")
    m = meridian_length(k)
    r = default_radius(k)
    h = axial_spacing(k)
    out = RowFeasibility(k, m, r, h)
    if r.sign() <= 0:
        # every belt has length > 4 >= m: only meridians can be systoles
        out.obstructions.append("negative radius: meridian shorter than every belt")
        return out
    if r >= 1:
        out.obstructions.append("discs overlap: required radius >= 1")
    if r >= h:
        out.obstructions.append("clearance failure: r >= h, every meridian is bent and longer than m")
        if r < 1:
            out.taut_meridian = _taut_meridian_witness(k, r)
    # a belt is strictly shorter than m exactly when its hull perimeter is below 4
    four = ExactLength.rational(4)
    out.shorter_belts = sum(1 for shape in belt_shapes(four, k) if hull_perimeter(convex_hull(shape)) < four)
    if out.shorter_belts:
        out.obstructions.append(f"{out.shorter_belts} belt shapes strictly shorter than the meridian")
    return out
