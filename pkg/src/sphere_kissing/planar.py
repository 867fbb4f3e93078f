"""Exact planar predicates on lattice points.

The map ``(a, b) -> (a, b*sqrt(3))`` has positive determinant, so orientation
tests run on the integer pairs directly.  Squared distances use the inner
product ``a1*a2 + 3*b1*b2`` and are rational.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact import ExactLength
from .lattice import LatticeVec


def orient(p: LatticeVec, q: LatticeVec, r: LatticeVec) -> int:
    v = (q.a - p.a) * (r.b - p.b) - (q.b - p.b) * (r.a - p.a)
    return (v > 0) - (v < 0)


def convex_hull(points: Iterable[LatticeVec]) -> list[LatticeVec]:
    """Counter-clockwise hull vertices, collinear points dropped (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        out: list[LatticeVec] = []
        for p in seq:
            while len(out) >= 2 and orient(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def hull_edges(hull: Sequence[LatticeVec]) -> list[tuple[LatticeVec, LatticeVec]]:
    if len(hull) == 1:
        return [(hull[0], hull[0])]
    if len(hull) == 2:
        return [(hull[0], hull[1]), (hull[1], hull[0])]
    return [(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]


def hull_perimeter(hull: Sequence[LatticeVec]) -> ExactLength:
    total = ExactLength.zero()
    for p, q in hull_edges(hull):
        if p != q:
            total = total + (q - p).length()
    return total


def inside_hull(hull: Sequence[LatticeVec], p: LatticeVec) -> bool:
    """Closed containment of ``p`` in the convex polygon ``hull``."""
    if len(hull) == 1:
        return p == hull[0]
    if len(hull) == 2:
        return on_segment(hull[0], hull[1], p)
    return all(orient(a, b, p) >= 0 for a, b in hull_edges(hull))


def on_segment(a: LatticeVec, b: LatticeVec, p: LatticeVec) -> bool:
    return (
        orient(a, b, p) == 0
        and min(a.a, b.a) <= p.a <= max(a.a, b.a)
        and min(a.b, b.b) <= p.b <= max(a.b, b.b)
    )


def segments_intersect(a: LatticeVec, b: LatticeVec, c: LatticeVec, d: LatticeVec) -> bool:
    """Closed segments [a, b] and [c, d] share at least one point."""
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (
        (o1 == 0 and on_segment(a, b, c))
        or (o2 == 0 and on_segment(a, b, d))
        or (o3 == 0 and on_segment(c, d, a))
        or (o4 == 0 and on_segment(c, d, b))
    )


def point_segment_dist2(p: LatticeVec, a: LatticeVec, b: LatticeVec) -> Fraction:
    ab = b - a
    ap = p - a
    L = ab.squared_length()
    if L == 0:
        return Fraction(ap.squared_length())
    t = Fraction(ap.dot(ab), L)
    t = min(max(t, Fraction(0)), Fraction(1))
    dx = ap.a - t * ab.a
    dy = ap.b - t * ab.b
    return dx * dx + 3 * dy * dy


def hull_dist2(h1: Sequence[LatticeVec], h2: Sequence[LatticeVec]) -> Fraction:
    """Squared distance between two convex lattice polygons (0 if they meet)."""
    e1, e2 = hull_edges(h1), hull_edges(h2)
    for a, b in e1:
        for c, d in e2:
            if segments_intersect(a, b, c, d):
                return Fraction(0)
    if inside_hull(h1, h2[0]) or inside_hull(h2, h1[0]):
        return Fraction(0)
    best = None
    for p in h1:
        for c, d in e2:
            v = point_segment_dist2(p, c, d)
            best = v if best is None or v < best else best
    for p in h2:
        for a, b in e1:
            v = point_segment_dist2(p, a, b)
            best = v if v < best else best
    return best
