"""Combinatorial half of the kissing bound.

Two inputs are taken as given: systoles meet at most twice, and when two meet
twice one of them bounds two cusps.  From these, systoles bounding three or
more cusps on both sides are pairwise disjoint, hence their splits of the
punctures form a laminar family; and the arcs joining the two cusps inside
each two-cusp systole extend to a triangulation of the sphere.  This module
checks the counting consequences: a laminar family has at most n - 5 such
splits and a triangulation with n vertices has 3(n - 2) edges.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from typing import Sequence

from .census import Census
from .geodesics import BeltClass
from .lattice import UNIT_DIRECTIONS, Chimney, LatticeVec, axial_index, nearest_displacement, translation
from .planar import orient, segments_intersect
from .surface import SphereModel

BRUTE_FORCE_LIMIT = 12


@dataclass(frozen=True)
class CurvePartition:
    """A split of the punctures {1..n}, stored by its canonical (smaller) side."""

    n: int
    side: frozenset[int]

    def __post_init__(self) -> None:
        full = frozenset(range(1, self.n + 1))
        side = frozenset(self.side)
        if not side <= full:
            raise ValueError(f"side {sorted(side)} is not a subset of 1..{self.n}")
        other = full - side
        a, b = tuple(sorted(side)), tuple(sorted(other))
        object.__setattr__(self, "side", frozenset(min((len(a), a), (len(b), b))[1]))

    @property
    def other(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.side

    @property
    def essential(self) -> bool:
        return len(self.side) >= 2

    @property
    def bounds_two(self) -> bool:
        return len(self.side) == 2


def laminar_compatible(p: CurvePartition, q: CurvePartition) -> bool:
    """Splits realisable by disjoint curves: some side of one is nested in, or disjoint from, a side of the other."""
    if p.n != q.n:
        raise ValueError(f"partitions of different puncture sets ({p.n} vs {q.n})")
    for x in (p.side, p.other):
        for y in (q.side, q.other):
            if not (x & y):
                return True
    return False


def _splits_both_sides_at_least_three(n: int) -> list[int]:
    """Bitmasks of the canonical sides (bit i-1 = puncture i)."""
    out = set()
    full = (1 << n) - 1
    for k in range(3, n // 2 + 1):
        for combo in itertools.combinations(range(n), k):
            mask = sum(1 << i for i in combo)
            other = full ^ mask
            if k * 2 == n:
                mask = min(mask, other, key=lambda x: tuple(i for i in range(n) if x >> i & 1))
            out.add(mask)
    return sorted(out)


def _compatible_masks(x: int, y: int, full: int) -> bool:
    xc, yc = full ^ x, full ^ y
    return not (x & y) or not (x & yc) or not (xc & y) or not (xc & yc)


def _max_clique(cands: list[int], adj: dict[int, int], index: dict[int, int]) -> int:
    best = 0

    def grow(size: int, pool: int) -> None:
        nonlocal best
        if pool == 0:
            best = max(best, size)
            return
        if size + bin(pool).count("1") <= best:
            return
        while pool:
            if size + bin(pool).count("1") <= best:
                return
            low = pool & -pool
            i = low.bit_length() - 1
            pool ^= low
            grow(size + 1, pool & adj[cands[i]])

    full_pool = (1 << len(cands)) - 1
    grow(0, full_pool)
    return best


def laminar_max(n: int, limit: int = BRUTE_FORCE_LIMIT) -> int | None:
    """Largest pairwise-compatible family of splits with both sides >= 3.

    Exhaustive branch and bound.  By symmetry under relabelling the punctures,
    a non-empty family may be assumed to contain the split {1..k} for some k.
    Returns None above ``limit``.
    """
    if n < 5:
        raise ValueError("laminar_max is defined for n >= 5")
    if n > limit:
        return None
    full = (1 << n) - 1
    splits = _splits_both_sides_at_least_three(n)
    if not splits:
        return 0
    best = 0
    for k in range(3, n // 2 + 1):
        seed = (1 << k) - 1
        cands = [s for s in splits if s != seed and _compatible_masks(seed, s, full)]
        index = {s: i for i, s in enumerate(cands)}
        adj = {}
        for s in cands:
            bits = 0
            for t in cands:
                if t != s and _compatible_masks(s, t, full):
                    bits |= 1 << index[t]
            adj[s] = bits
        best = max(best, 1 + _max_clique(cands, adj, index))
    return best


def laminar_max_exhaustive(n: int) -> int:
    """Plain subset enumeration; only practical for n <= 7."""
    full = (1 << n) - 1
    splits = _splits_both_sides_at_least_three(n)
    best = 0
    for size in range(1, len(splits) + 1):
        found = False
        for fam in itertools.combinations(splits, size):
            if all(_compatible_masks(x, y, full) for x, y in itertools.combinations(fam, 2)):
                found = True
                break
        if not found:
            break
        best = size
    return best


# -- rotation systems ---------------------------------------------------------


@dataclass(frozen=True)
class ArcSystem:
    """Graph embedded on an oriented surface by a rotation system.

    Edge ``e = (u, v)`` owns darts ``2e`` (from u) and ``2e + 1`` (from v);
    ``rotation[x]`` lists the darts leaving vertex ``x`` counter-clockwise.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rotation) != self.n:
            raise ValueError("one rotation per vertex required")
        seen = sorted(d for rot in self.rotation for d in rot)
        if seen != list(range(2 * len(self.edges))):
            raise ValueError("every dart must appear in exactly one rotation")
        for v, rot in enumerate(self.rotation):
            for d in rot:
                if self.tail(d) != v:
                    raise ValueError(f"dart {d} listed at vertex {v} but leaves {self.tail(d)}")

    def tail(self, d: int) -> int:
        u, v = self.edges[d // 2]
        return u if d % 2 == 0 else v

    @classmethod
    def from_neighbor_order(cls, n: int, edges: Sequence[tuple[int, int]],
                            order: dict[int, list[int]]) -> ArcSystem:
        """``order[v]`` lists edge indices around ``v`` counter-clockwise."""
        rotation = []
        for v in range(n):
            darts = []
            for e in order.get(v, []):
                a, b = edges[e]
                darts.append(2 * e if a == v else 2 * e + 1)
            rotation.append(tuple(darts))
        return cls(n, tuple(tuple(e) for e in edges), tuple(rotation))

    @classmethod
    def from_plane(cls, points: Sequence[tuple[float, float]], edges: Sequence[tuple[int, int]]) -> ArcSystem:
        """Straight-line embedding: rotation from the angular order of the edges."""
        order: dict[int, list[int]] = {v: [] for v in range(len(points))}
        for e, (a, b) in enumerate(edges):
            order[a].append(e)
            order[b].append(e)
        for v, es in order.items():
            x0, y0 = points[v]

            def angle(e: int) -> float:
                a, b = edges[e]
                x1, y1 = points[b if a == v else a]
                return math.atan2(y1 - y0, x1 - x0)

            es.sort(key=angle)
        return cls.from_neighbor_order(len(points), edges, order)

    def _sigma(self) -> dict[int, int]:
        nxt = {}
        for rot in self.rotation:
            for i, d in enumerate(rot):
                nxt[d] = rot[(i + 1) % len(rot)]
        return nxt

    def faces(self) -> list[list[int]]:
        """Face boundaries as dart cycles of ``d -> sigma(alpha(d))``."""
        sigma = self._sigma()
        seen = set()
        out = []
        for d in range(2 * len(self.edges)):
            if d in seen:
                continue
            cyc = []
            x = d
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = sigma[x ^ 1]
            out.append(cyc)
        return out

    def connected(self) -> bool:
        if self.n == 0:
            return True
        adj = {v: set() for v in range(self.n)}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        stack, seen = [0], {0}
        while stack:
            v = stack.pop()
            for u in adj[v] - seen:
                seen.add(u)
                stack.append(u)
        return len(seen) == self.n


def tetrahedron() -> ArcSystem:
    pts = [(0.0, 0.0), (1.0, 0.0), (-0.5, 0.866), (-0.5, -0.866)]
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]
    return ArcSystem.from_plane(pts, edges)


def octahedron() -> ArcSystem:
    outer = [(2 * math.cos(math.radians(t)), 2 * math.sin(math.radians(t))) for t in (90, 210, 330)]
    inner = [(0.5 * math.cos(math.radians(t)), 0.5 * math.sin(math.radians(t))) for t in (30, 150, 270)]
    pts = outer + inner
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
             (3, 0), (3, 2), (4, 0), (4, 1), (5, 1), (5, 2)]
    return ArcSystem.from_plane(pts, edges)


def path_graph(n: int) -> ArcSystem:
    return ArcSystem.from_plane([(float(i), 0.0) for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def euler_edge_bound(system: ArcSystem) -> dict:
    if not system.connected():
        raise ValueError("the arc system must be connected")
    V, E = system.n, len(system.edges)
    faces = system.faces() if E else [[]]
    F = len(faces)
    chi = V - E + F
    if chi != 2:
        raise ValueError(f"not a spherical map: V - E + F = {chi}")
    triangulated = E > 0 and all(len(f) == 3 for f in faces)
    bound = 3 * (V - 2)
    if triangulated and (E != bound or F != 2 * (V - 2)):
        raise AssertionError(f"triangulation with E={E}, F={F} contradicts 3E = 2F")
    return {
        "V": V,
        "E": E,
        "F": F,
        "chi": chi,
        "triangulated": triangulated,
        "bound": bound,
        "attained": E == bound,
    }


# -- the construction against the bound ---------------------------------------


def _pair_arcs(census: Census) -> list[tuple[int, int, LatticeVec, LatticeVec]]:
    arcs = []
    for e in census.entries:
        g = e.representative
        if len(g.partition) != 2 or not isinstance(g.curve, BeltClass):
            continue
        p, q = sorted(g.curve.enclosed, key=lambda v: axial_index(v))
        arcs.append((axial_index(p), axial_index(q), p, q))
    return arcs


def arcs_pairwise_simple(arcs, rows: int = 3) -> bool:
    """No two arc segments meet on the cylinder except at a shared endpoint chimney."""
    w = translation(rows)
    for (i1, j1, p1, q1), (i2, j2, p2, q2) in itertools.combinations(arcs, 2):
        if max(i1, j1) + 3 < min(i2, j2) or max(i2, j2) + 3 < min(i1, j1):
            continue
        shared = {i1, j1} & {i2, j2}
        for t in range(-2, 3):
            a, b = p2 + t * w, q2 + t * w
            if not segments_intersect(p1, q1, a, b):
                continue
            common = {p1, q1} & {a, b}
            if not (shared and len(common) == 1 and _meet_only_at(p1, q1, a, b, common.pop())):
                return False
    return True


def _meet_only_at(p, q, a, b, x) -> bool:
    # collinear overlap would share more than the endpoint
    other1 = q if p == x else p
    other2 = b if a == x else a
    return orient(x, other1, other2) != 0 or (other1 - x).dot(other2 - x) < 0


def census_arc_system(census: Census, model: SphereModel) -> ArcSystem:
    """Rotation system of the arcs joining the two cusps inside each two-cusp systole."""
    arcs = _pair_arcs(census)
    n = model.n
    edges = [(i - 1, j - 1) for i, j, _, _ in arcs]
    order: dict[int, list[int]] = {v: [] for v in range(n)}
    directions = {u: k for k, u in enumerate(UNIT_DIRECTIONS)}
    for e, (i, j, p, q) in enumerate(arcs):
        d = nearest_displacement(Chimney(i), Chimney(j), model.rows)
        order[i - 1].append((directions[d], e))
        order[j - 1].append((directions[-d], e))
    return ArcSystem.from_neighbor_order(n, edges, {v: [e for _, e in sorted(lst)] for v, lst in order.items()})


def construction_tightness(census: Census, model: SphereModel) -> dict:
    n = census.n
    if n < 5:
        raise ValueError("tightness is only claimed for n >= 5")
    a_classes = [e for e in census.entries if len(e.representative.partition) == 2]
    non_a = [e for e in census.entries if len(e.representative.partition) >= 3]
    arcs = _pair_arcs(census)
    simple = arcs_pairwise_simple(arcs, model.rows)
    euler = euler_edge_bound(census_arc_system(census, model))
    splits = [CurvePartition(n, frozenset(e.representative.partition)) for e in non_a]
    laminar = all(laminar_compatible(p, q) for p, q in itertools.combinations(splits, 2))
    lam = laminar_max(n) if n <= BRUTE_FORCE_LIMIT else None
    a_bound, non_a_bound = 3 * (n - 2), n - 5
    return {
        "n": n,
        "a_count": len(a_classes),
        "a_bound": a_bound,
        "a_slack": a_bound - len(a_classes),
        "arcs_simple": simple,
        "arc_triangulation": euler["triangulated"],
        "non_a_count": len(non_a),
        "non_a_bound": non_a_bound,
        "non_a_laminar": laminar,
        "laminar_max": lam,
        "total": census.total,
        "total_bound": 4 * n - 11,
        "attains": (
            len(a_classes) == a_bound
            and len(non_a) == non_a_bound
            and census.total == 4 * n - 11
            and simple
            and laminar
            and euler["attained"]
            and (lam is None or lam == non_a_bound)
        ),
    }


def upper_bound_report(n: int, limit: int = BRUTE_FORCE_LIMIT) -> dict:
    lam = laminar_max(n, limit) if n <= limit else None
    return {
        "n": n,
        "laminar_max": lam,
        "edge_bound": 3 * (n - 2),
        "total_bound": 3 * (n - 2) + (n - 5),
        "construction_attains": None,
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
