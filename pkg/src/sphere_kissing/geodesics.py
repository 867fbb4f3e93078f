"""Shortest closed curves per free-homotopy class on the capped cylinder.

Two families of essential curves can be as short as a meridian:

* belts, which lift to closed curves in the plane and wrap tightly around a
  finite set of discs.  The shortest curve around a set of discs of common
  radius is the boundary of the convex hull of their union, of length
  ``perimeter(hull of centers) + 2*pi*r``;
* meridians, which wind once around the cylinder.  A winding-once curve lifts
  to a path from ``P`` to ``P + w``, so it has length at least ``|w|``, with
  equality only for a straight segment.

Curves winding ``k`` times have length at least ``|k|*|w|``.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Union

from .exact import ExactLength
from .lattice import Chimney, LatticeVec, axial_index, translation
from .planar import convex_hull, hull_dist2, hull_edges, hull_perimeter, inside_hull, point_segment_dist2
from .surface import SphereModel
from .taut import Disc, TautResult, taut_periodic_curve


class BelowSystoleWarning(UserWarning):
    """The requested cutoff is shorter than any essential curve."""


class IncompleteEnumerationWarning(UserWarning):
    """The cutoff is long enough that some classes are not enumerated."""


class Kind(str, enum.Enum):
    BELT = "belt"
    MERIDIAN = "meridian"
    INESSENTIAL = "inessential"
    CONTRACTIBLE = "contractible"


@dataclass(frozen=True)
class BeltClass:
    """Belt around a finite set of chimney lifts (fixed lifts, not up to shift)."""

    enclosed: frozenset[LatticeVec]

    def __post_init__(self) -> None:
        if not self.enclosed:
            raise ValueError("a belt must enclose at least one chimney")

    @property
    def hull(self) -> tuple[LatticeVec, ...]:
        return tuple(convex_hull(self.enclosed))


@dataclass(frozen=True)
class MeridianClass:
    gap: int


Curve = Union[BeltClass, MeridianClass]
Length = Union[ExactLength, TautResult]


@dataclass(frozen=True)
class GeodesicClass:
    kind: Kind
    partition: tuple[int, ...]
    shortest_length: Optional[Length]
    curve: Curve
    straight: bool = True

    @property
    def essential(self) -> bool:
        return self.kind in (Kind.BELT, Kind.MERIDIAN)

    def certificate(self, rows: int = 3) -> dict:
        if isinstance(self.curve, BeltClass):
            hull = self.curve.hull
            return {
                "type": "belt",
                "hull": [[v.a, v.b] for v in hull],
                "arc_angles": [f"{t:.12f}" for t in exterior_angles(hull)],
                "chimneys": sorted(axial_index(v, rows) for v in self.curve.enclosed),
            }
        return {"type": "meridian", "gap": self.curve.gap, "straight": self.straight}

    def to_dict(self, rows: int = 3) -> dict:
        length = self.shortest_length
        if isinstance(length, TautResult):
            length = f"~{float(length):.15f}"
        elif length is not None:
            length = str(length)
        return {
            "kind": self.kind.value,
            "partition": list(self.partition),
            "length": length,
            "certificate": self.certificate(rows),
        }


def exterior_angles(hull: Sequence[LatticeVec]) -> list[float]:
    """Arc angle (radians) swept by the belt at each hull vertex; they sum to 2*pi."""
    if len(hull) == 1:
        return [2 * math.pi]
    if len(hull) == 2:
        return [math.pi, math.pi]
    out = []
    k = len(hull)
    for i in range(k):
        ax, ay = (hull[i] - hull[i - 1]).xy()
        bx, by = (hull[(i + 1) % k] - hull[i]).xy()
        out.append(math.atan2(ax * by - ay * bx, ax * bx + ay * by))
    return out


def canonical_partition(side: frozenset[int] | set[int], n: int) -> tuple[int, ...]:
    """Smaller side of the split of {1..n}; ties broken lexicographically."""
    a = tuple(sorted(side))
    b = tuple(sorted(set(range(1, n + 1)) - set(side)))
    return min((len(a), a), (len(b), b))[1]


# -- lengths ---------------------------------------------------------------


def belt_length(enclosed, r: ExactLength) -> ExactLength:
    pts = list(enclosed)
    if not pts:
        raise ValueError("belt_length of an empty set")
    base = min(pts)
    return _belt_length(frozenset(p - base for p in pts), r)


@lru_cache(maxsize=4096)
def _belt_length(shape: frozenset[LatticeVec], r: ExactLength) -> ExactLength:
    return hull_perimeter(convex_hull(shape)) + 2 * ExactLength.pi() * r


def meridian_shortest(model: SphereModel, j: int) -> tuple[Length, bool]:
    """Length of the shortest curve winding once through gap ``j``, and whether it is straight."""
    if not 0 <= j <= model.n:
        raise ValueError(f"gap {j} outside 0..{model.n}")
    # nearest chimney centers sit at axial distance h from the mid-gap
    if model.r < model.h:
        return model.m, True
    taut = _taut_meridian(model, j)
    if taut.straight:
        return model.m, True
    return taut, False


def _taut_meridian(model: SphereModel, j: int) -> TautResult:
    rows = model.rows
    w = translation(rows)
    m = float(model.m)
    h = float(model.h)
    r = float(model.r)
    c = (2 * j + 1) * h
    discs = []
    for s in range(1, model.n + 1):
        y = 2 * s * h - c
        if abs(y) >= 2 * r:
            continue
        lift = Chimney(s).lift()
        x = (lift.dot(w) / math.sqrt(w.squared_length())) % m
        discs.append(Disc(x, y, +1 if s <= j else -1, s))
    return taut_periodic_curve(discs, m, r)


# -- classification ----------------------------------------------------------


def _band_indices(model: SphereModel, belt: BeltClass) -> frozenset[int]:
    idx = [axial_index(v, model.rows) for v in belt.enclosed]
    if len(set(idx)) != len(idx):
        raise ValueError("belt encloses two lifts of the same chimney (it wraps the cylinder)")
    if min(idx) < 1 or max(idx) > model.n:
        raise ValueError(f"belt encloses chimneys {sorted(idx)} outside the band 1..{model.n}")
    return frozenset(idx)


def classify(model: SphereModel, curve: Curve) -> GeodesicClass:
    n = model.n
    if isinstance(curve, MeridianClass):
        if not 0 <= curve.gap <= n:
            raise ValueError(f"gap {curve.gap} outside 0..{n}")
        side = frozenset(range(1, curve.gap + 1))
    else:
        side = _band_indices(model, curve)
    part = canonical_partition(side, n)
    if len(part) == 0:
        return GeodesicClass(Kind.CONTRACTIBLE, part, None, curve)
    if len(part) == 1:
        return GeodesicClass(Kind.INESSENTIAL, part, None, curve)
    if isinstance(curve, MeridianClass):
        length, straight = meridian_shortest(model, curve.gap)
        return GeodesicClass(Kind.MERIDIAN, part, length, curve, straight)
    return GeodesicClass(Kind.BELT, part, belt_length(curve.enclosed, model.r), curve)


# -- homotopy ---------------------------------------------------------------


def _belt_axial_extent(model: SphereModel, belt: BeltClass) -> tuple[ExactLength, ExactLength]:
    idx = [axial_index(v, model.rows) for v in belt.enclosed]
    return model.axial(min(idx)) - model.r, model.axial(max(idx)) + model.r


def _belts_disjoint(model: SphereModel, b1: BeltClass, b2: BeltClass) -> bool:
    w = translation(model.rows)
    h1, h2 = b1.hull, b2.hull
    d = h2[0] - h1[0]
    two_r = 2 * model.r
    for t in range(-2 - math.isqrt(d.squared_length() // w.squared_length() + 1),
                   3 + math.isqrt(d.squared_length() // w.squared_length() + 1)):
        shifted = [v + t * w for v in h2]
        dist2 = hull_dist2(h1, shifted)
        if ExactLength.sqrt(dist2) <= two_r:
            return False
    return True


def _inner_side(model: SphereModel, g: GeodesicClass) -> frozenset[int]:
    if isinstance(g.curve, MeridianClass):
        return frozenset(range(1, g.curve.gap + 1))
    return _band_indices(model, g.curve)


def homotopic(model: SphereModel, g1: GeodesicClass, g2: GeodesicClass) -> bool:
    """Certify free homotopy of two essential classes.

    Sound but not complete: returns True only when the two certificate curves
    are disjoint, split the punctures the same way, and cobound an annulus
    without punctures.
    """
    if not (g1.essential and g2.essential):
        raise ValueError("homotopic() expects essential classes")
    if g1.curve == g2.curve:
        return True
    if g1.partition != g2.partition:
        return False
    c1, c2 = g1.curve, g2.curve
    all_cusps = frozenset(range(1, model.n + 1))
    s1, s2 = _inner_side(model, g1), _inner_side(model, g2)
    if isinstance(c1, MeridianClass) and isinstance(c2, MeridianClass):
        if not (g1.straight and g2.straight):
            return False
        lo, hi = sorted((c1.gap, c2.gap))
        between = frozenset(range(lo + 1, hi + 1))
    elif isinstance(c1, BeltClass) and isinstance(c2, BeltClass):
        if not _belts_disjoint(model, c1, c2):
            return False
        if s1 <= s2:
            between = s2 - s1
        elif s2 <= s1:
            between = s1 - s2
        elif not (s1 & s2):
            between = all_cusps - s1 - s2
        else:
            return False
    else:
        belt, mer = (g1, g2) if isinstance(c1, BeltClass) else (g2, g1)
        if not mer.straight:
            return False
        lo, hi = _belt_axial_extent(model, belt.curve)
        c = model.axial(model.gap_position(mer.curve.gap))
        left = frozenset(range(1, mer.curve.gap + 1))
        e = _inner_side(model, belt)
        if hi < c:
            between = left - e
        elif lo > c:
            between = (all_cusps - left) - e
        else:
            return False
    return not between


# -- enumeration --------------------------------------------------------------


@lru_cache(maxsize=64)
def belt_shapes(max_perimeter: ExactLength, rows: int = 3) -> tuple[frozenset[LatticeVec], ...]:
    """Convex lattice sets (>= 2 points, lowest point at the origin) with hull perimeter <= bound.

    The diameter of a set is at most half its hull perimeter, so candidates
    lie in a disc of radius ``max_perimeter / 2`` around the lowest point.
    Hull perimeter is monotone under inclusion, which prunes the search.
    """
    _, hi = max_perimeter.interval(64)
    diam = hi / 2
    if diam < 0:
        return ()
    d2 = diam * diam
    R = math.isqrt(math.floor(d2)) + 1
    origin = LatticeVec(0, 0)
    cands = []
    for a in range(-R, R + 1):
        for b in range(-R, R + 1):
            if (a - b) % 2:
                continue
            v = LatticeVec(a, b)
            if v > origin and v.squared_length() <= d2:
                cands.append(v)
    found: list[frozenset[LatticeVec]] = []
    not_closed = False

    def extend(current: list[LatticeVec], start: int) -> None:
        nonlocal not_closed
        for i in range(start, len(cands)):
            v = cands[i]
            if any((v - u).squared_length() > d2 for u in current):
                continue
            nxt = current + [v]
            hull = convex_hull(nxt)
            if hull_perimeter(hull) > max_perimeter:
                continue
            if _lattice_closed(hull, nxt):
                found.append(frozenset(nxt))
            else:
                not_closed = True
            extend(nxt, i + 1)

    extend([origin], 0)
    if not_closed:
        warnings.warn(
            "belt candidates with lattice points strictly inside their hull were skipped",
            IncompleteEnumerationWarning,
            stacklevel=2,
        )
    return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))


def _lattice_closed(hull: Sequence[LatticeVec], pts: Sequence[LatticeVec]) -> bool:
    members = set(pts)
    lo_a = min(v.a for v in hull)
    hi_a = max(v.a for v in hull)
    lo_b = min(v.b for v in hull)
    hi_b = max(v.b for v in hull)
    for a in range(lo_a, hi_a + 1):
        for b in range(lo_b, hi_b + 1):
            if (a - b) % 2 == 0:
                v = LatticeVec(a, b)
                if v not in members and inside_hull(hull, v):
                    return False
    return True


def _belt_is_taut(shape: frozenset[LatticeVec], r: ExactLength) -> bool:
    """No foreign disc meets the inflated hull, so the hull boundary is a valid curve."""
    hull = convex_hull(shape)
    reach = math.ceil(float(2 * r)) + 2
    lo_a = min(v.a for v in hull) - reach
    hi_a = max(v.a for v in hull) + reach
    lo_b = min(v.b for v in hull) - reach
    hi_b = max(v.b for v in hull) + reach
    two_r = 2 * r
    for a in range(lo_a, hi_a + 1):
        for b in range(lo_b, hi_b + 1):
            if (a - b) % 2:
                continue
            v = LatticeVec(a, b)
            if v in shape:
                continue
            d2 = min(point_segment_dist2(v, p, q) for p, q in hull_edges(hull))
            if ExactLength.sqrt(d2) <= two_r:
                return False
    return True


def _placements(model: SphereModel, shape: frozenset[LatticeVec]):
    rows = model.rows
    idx = [axial_index(v, rows) for v in shape]
    if len(set(idx)) != len(idx):
        return
    lo, hi = min(idx), max(idx)
    for first in range(1, model.n - (hi - lo) + 1):
        shift = Chimney(first - lo).lift()
        yield BeltClass(frozenset(v + shift for v in shape))


def winding_lower_bound_squared(model: SphereModel) -> ExactLength:
    """Square of a lower bound for winding-once curves whose split is not a gap split.

    Such a curve must rise above a disc of one side and dip below a disc of the
    other side lying at least 2h further along the axis, every period.
    """
    spread = 4 * (model.h + model.r)
    return model.m * model.m + spread * spread


def enumerate_short_classes(model: SphereModel, cutoff: ExactLength) -> list[GeodesicClass]:
    """All essential classes of length <= cutoff, before homotopy grouping.

    Complete at ``cutoff == |w|``.  Above that, only convex belts and straight
    meridians are listed and an :class:`IncompleteEnumerationWarning` is issued.
    """
    cutoff = ExactLength.coerce(cutoff)
    m = model.m
    if cutoff < m:
        warnings.warn(f"cutoff {cutoff} is below the meridian length {m}; no essential class is that short",
                      BelowSystoleWarning, stacklevel=2)
        return []
    if cutoff >= 2 * m:
        raise ValueError("cutoffs of two meridian lengths or more admit classes winding twice; not enumerated")
    if cutoff > m:
        warnings.warn("above the systole length only convex belts and straight meridians are enumerated",
                      IncompleteEnumerationWarning, stacklevel=2)
    if cutoff * cutoff >= winding_lower_bound_squared(model):
        warnings.warn("cutoff reaches non-gap winding classes, which are not enumerated",
                      IncompleteEnumerationWarning, stacklevel=2)

    out: list[GeodesicClass] = []
    budget = cutoff - 2 * ExactLength.pi() * model.r
    w = translation(model.rows)
    for shape in belt_shapes(budget, model.rows):
        if not _belt_is_taut(shape, model.r):
            warnings.warn(f"belt around {sorted(shape)} touches a foreign disc; skipped",
                          IncompleteEnumerationWarning, stacklevel=2)
            continue
        hull = convex_hull(shape)
        wraps = any(hull_dist2(hull, [v + t * w for v in hull]) == 0
                    or ExactLength.sqrt(hull_dist2(hull, [v + t * w for v in hull])) <= 2 * model.r
                    for t in (-2, -1, 1, 2))
        if wraps:
            continue
        for belt in _placements(model, shape):
            g = classify(model, belt)
            if g.essential and g.shortest_length <= cutoff:
                out.append(g)
    for j in range(model.n + 1):
        g = classify(model, MeridianClass(j))
        if not g.essential:
            continue
        length = g.shortest_length
        if isinstance(length, TautResult):
            if float(length) <= float(cutoff) - 1e-12:
                out.append(g)
        elif length <= cutoff:
            out.append(g)
    return out
