"""Gauss-Bonnet bookkeeping for the hexagonal cusp block of the hyperbolic plane with cusps."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import ExactLength


@dataclass(frozen=True)
class HyperbolicTriangle:
    """Angles in units of pi; 0 marks an ideal vertex."""

    angles: tuple[Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        angles = tuple(Fraction(a) for a in self.angles)
        if len(angles) != 3:
            raise ValueError("a triangle has three angles")
        if any(a < 0 or a >= 1 for a in angles):
            raise ValueError(f"angles must lie in [0, pi), got {[str(a) for a in angles]} (units of pi)")
        if sum(angles) >= 1:
            raise ValueError(f"angle sum {sum(angles)}*pi >= pi: not a hyperbolic triangle")
        object.__setattr__(self, "angles", angles)


def triangle_area(t: HyperbolicTriangle) -> ExactLength:
    return ExactLength.pi(1 - sum(t.angles))


def block_check() -> dict:
    """Twelve (0, pi/2, pi/3) triangles make a cusp neighbourhood bounded by a regular hexagon."""
    piece = triangle_area(HyperbolicTriangle((Fraction(0), Fraction(1, 2), Fraction(1, 3))))
    area = 12 * piece
    corner = 2 * Fraction(1, 3)
    turning = 6 * (1 - corner)
    return {
        "piece_area": piece,
        "block_area": area,
        "area_is_2pi": area == ExactLength.pi(2),
        "corner_angle": ExactLength.pi(corner),
        "corner_is_2pi_over_3": corner == Fraction(2, 3),
        "hexagon_turning_is_2pi": turning == 2,
    }
