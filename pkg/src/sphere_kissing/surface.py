"""The capped cylinder: n chimneys between two straight meridians, plus two round caps."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exact import ExactLength
from .lattice import DEFAULT_ROWS, Chimney, axial_spacing, circumference_squared, translation

MODEL_VERSION = 1


class ModelError(ValueError):
    """Parameters that do not describe a valid punctured-sphere model."""


def meridian_length(rows: int = DEFAULT_ROWS) -> ExactLength:
    return ExactLength.sqrt(circumference_squared(rows))


def default_radius(rows: int = DEFAULT_ROWS) -> ExactLength:
    """Radius at which a belt around two neighbours is exactly as long as a meridian."""
    return (meridian_length(rows) - 4) / (2 * ExactLength.pi())


def belt_pair_length(r: ExactLength) -> ExactLength:
    return 4 + 2 * ExactLength.pi() * r


@dataclass(frozen=True)
class SurfaceParams:
    n: int
    r: Optional[ExactLength] = None
    rows: int = DEFAULT_ROWS

    def __post_init__(self) -> None:
        translation(self.rows)  # rejects even row counts
        if self.r is None:
            object.__setattr__(self, "r", default_radius(self.rows))
        else:
            object.__setattr__(self, "r", ExactLength.coerce(self.r))

    @property
    def is_default(self) -> bool:
        return self.rows == DEFAULT_ROWS and self.r == default_radius(DEFAULT_ROWS)

    @property
    def h(self) -> ExactLength:
        return axial_spacing(self.rows)

    @property
    def m(self) -> ExactLength:
        return meridian_length(self.rows)


@dataclass(frozen=True)
class Cap:
    side: str  # "left" or "right"
    circumference: ExactLength


@dataclass(frozen=True)
class SphereModel:
    params: SurfaceParams
    chimneys: tuple[Chimney, ...]
    # cut meridians, in units of the chimney index
    left_cut: Fraction
    right_cut: Fraction
    caps: tuple[Cap, Cap]
    strict: bool = field(default=True, compare=False)

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def r(self) -> ExactLength:
        return self.params.r

    @property
    def h(self) -> ExactLength:
        return self.params.h

    @property
    def m(self) -> ExactLength:
        return self.params.m

    @property
    def rows(self) -> int:
        return self.params.rows

    def axial(self, index_position) -> ExactLength:
        """Axial coordinate of a (possibly fractional) index position."""
        return 2 * self.h * Fraction(index_position)

    def gap_position(self, j: int) -> Fraction:
        """Index position of the mid-gap between chimneys ``j`` and ``j + 1``."""
        return Fraction(2 * j + 1, 2)

    def to_json(self) -> str:
        doc = {
            "version": MODEL_VERSION,
            "n": self.n,
            "rows": self.rows,
            "r": str(self.r),
            "chimneys": [c.s for c in self.chimneys],
            "cuts": [str(self.left_cut), str(self.right_cut)],
            "caps": [{"side": c.side, "circumference": str(c.circumference)} for c in self.caps],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str, strict: bool = True) -> SphereModel:
        doc = json.loads(text)
        if doc.get("version") != MODEL_VERSION:
            raise ModelError(f"unsupported model version {doc.get('version')!r}")
        params = SurfaceParams(doc["n"], ExactLength.parse(doc["r"]), doc["rows"])
        model = build(params, strict=strict)
        if [c.s for c in model.chimneys] != doc["chimneys"] or [str(model.left_cut), str(model.right_cut)] != doc["cuts"]:
            raise ModelError("document is inconsistent with its parameters")
        return model


def build(params: SurfaceParams, strict: bool = True) -> SphereModel:
    """Place chimneys 1..n and cut the cylinder at the mid-gaps outside them.

    ``strict`` enforces n >= 5 and straight-meridian clearance r < h; the
    exploratory mode only requires a positive radius with disjoint discs.
    """
    n, r = params.n, params.r
    if n < 1:
        raise ModelError("need at least one puncture")
    if strict and n < 5:
        raise ModelError(f"n={n}: the verified construction needs n >= 5 (use strict=False to explore)")
    if r.sign() <= 0:
        raise ModelError(f"chimney radius must be positive, got {r} ~ {float(r):.4f}")
    if r >= 1:
        raise ModelError(f"r={float(r):.4f}: discs of neighbouring chimneys would meet (need r < 1)")
    if strict and r >= params.h:
        raise ModelError(
            f"clearance violated: r={float(r):.4f} >= h={float(params.h):.4f}, no straight meridian exists"
        )
    m = params.m
    model = SphereModel(
        params=params,
        chimneys=tuple(Chimney(s) for s in range(1, n + 1)),
        left_cut=Fraction(1, 2),
        right_cut=Fraction(2 * n + 1, 2),
        caps=(Cap("left", m), Cap("right", m)),
        strict=strict,
    )
    if r < params.h:
        assert model.axial(model.left_cut) < model.chimneys[0].axial(params.rows) - r
        assert model.axial(model.right_cut) > model.chimneys[-1].axial(params.rows) + r
    return model


def constants_report(params: SurfaceParams) -> dict:
    m, r, h = params.m, params.r, params.h
    belt = belt_pair_length(r)
    quarter = Fraction(1, 4)
    return {
        "m": m,
        "r": r,
        "h": h,
        "belt_length": belt,
        "belt_equals_meridian": belt == m,
        "r_below_quarter": r < quarter,
        "h_above_quarter": h > quarter,
        "clearance": r < h,
    }
