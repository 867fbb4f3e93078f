"""The triangular lattice of side two and its quotient cylinder.

Points are stored as integer pairs ``(a, b)`` standing for ``(a, b*sqrt(3))``.
The lattice is spanned by ``(2, 0)`` and ``(1, 1)``, so membership is the
parity condition ``a = b (mod 2)``.  The quotient by the translation
``(1, rows)`` is a cylinder; each orbit (a chimney) is labelled by its axial
index ``s = (rows*a - b) / 2``, which orders chimneys along the cylinder axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exact import ExactLength

DEFAULT_ROWS = 3


@dataclass(frozen=True, order=True)
class LatticeVec:
    a: int
    b: int

    def __post_init__(self) -> None:
        if (self.a - self.b) % 2:
            raise ValueError(f"({self.a}, {self.b}) is not a lattice point: a and b differ in parity")

    def __add__(self, other: LatticeVec) -> LatticeVec:
        return LatticeVec(self.a + other.a, self.b + other.b)

    def __sub__(self, other: LatticeVec) -> LatticeVec:
        return LatticeVec(self.a - other.a, self.b - other.b)

    def __neg__(self) -> LatticeVec:
        return LatticeVec(-self.a, -self.b)

    def __mul__(self, t: int) -> LatticeVec:
        return LatticeVec(self.a * t, self.b * t)

    __rmul__ = __mul__

    def squared_length(self) -> int:
        return self.a * self.a + 3 * self.b * self.b

    def dot(self, other: LatticeVec) -> int:
        return self.a * other.a + 3 * self.b * other.b

    def length(self) -> ExactLength:
        return ExactLength.sqrt(self.squared_length())

    def xy(self) -> tuple[float, float]:
        return float(self.a), self.b * math.sqrt(3.0)


V1 = LatticeVec(2, 0)
V2 = LatticeVec(1, 1)
W = 3 * V2 - V1  # (1, 3): the translation generating the cylinder

# all lattice vectors of squared length 4
UNIT_DIRECTIONS = (
    LatticeVec(2, 0),
    LatticeVec(1, 1),
    LatticeVec(-1, 1),
    LatticeVec(-2, 0),
    LatticeVec(-1, -1),
    LatticeVec(1, -1),
)


def translation(rows: int = DEFAULT_ROWS) -> LatticeVec:
    """Generator of the quotient for a cylinder with ``rows`` rows of chimneys."""
    if rows < 1:
        raise ValueError("row count must be positive")
    if rows % 2 == 0:
        raise ValueError(f"rows={rows}: (1, {rows}) is not a lattice translation")
    return LatticeVec(1, rows)


def axial_index(v: LatticeVec, rows: int = DEFAULT_ROWS) -> int:
    return (rows * v.a - v.b) // 2


def circumference_squared(rows: int = DEFAULT_ROWS) -> int:
    return translation(rows).squared_length()


def axial_spacing(rows: int = DEFAULT_ROWS) -> ExactLength:
    """Half the axial gap between consecutive chimneys: sqrt(3)/|w|."""
    return ExactLength.sqrt(Fraction(3, circumference_squared(rows)))


@dataclass(frozen=True, order=True)
class Chimney:
    """A chimney of the quotient cylinder, identified by its axial index."""

    s: int

    def lift(self) -> LatticeVec:
        # any a works (b = rows*a - 2s); a = 0 minimizes |a|
        return LatticeVec(0, -2 * self.s)

    def axial(self, rows: int = DEFAULT_ROWS) -> ExactLength:
        return 2 * self.s * axial_spacing(rows)

    @classmethod
    def of(cls, v: LatticeVec, rows: int = DEFAULT_ROWS) -> Chimney:
        return cls(axial_index(v, rows))


def shift_window(d: LatticeVec, rows: int = DEFAULT_ROWS) -> range:
    """Shifts ``t`` guaranteed to contain the minimizer of ``|d + t*w|``."""
    w2 = circumference_squared(rows)
    bound = 1 + math.isqrt(d.squared_length() // w2 + 1) + 2
    return range(-bound, bound + 1)


def nearest_displacement(p: Chimney, q: Chimney, rows: int = DEFAULT_ROWS) -> LatticeVec:
    """Shortest lattice vector from a lift of ``p`` to a lift of ``q``.

    Ties (which do not occur for the default cylinder between distinct
    chimneys at distance two) resolve to the smallest shift ``t``.
    """
    w = translation(rows)
    d = q.lift() - p.lift()
    return min((d + t * w for t in shift_window(d, rows)), key=lambda v: (v.squared_length(), v))


def squared_distance_on_cylinder(p: Chimney, q: Chimney, rows: int = DEFAULT_ROWS) -> int:
    return nearest_displacement(p, q, rows).squared_length()


def neighbors_at_distance_two(p: Chimney, rows: int = DEFAULT_ROWS) -> frozenset[Chimney]:
    base = p.lift()
    return frozenset(Chimney.of(base + u, rows) for u in UNIT_DIRECTIONS)


def axial_order(chimneys: Iterable[Chimney]) -> tuple[Chimney, ...]:
    return tuple(sorted(set(chimneys)))
