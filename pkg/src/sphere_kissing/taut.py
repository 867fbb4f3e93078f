"""Shortest periodic curve threading between two families of discs.

The curve travels in the +x direction with period ``period``; discs with
``side=+1`` must stay below it and discs with ``side=-1`` above it.  Two
stages:

1. A discrete rubber band: the curve is sampled on a uniform x grid and each
   sample is moved, red/black alternately, to the midpoint of its neighbours
   clamped to the free corridor.  Every half-sweep is a constrained
   minimisation of a convex function of one coordinate, so the polyline length
   never increases.
2. The discs the band rests on define a tangent chain (tangent segments plus
   boundary arcs) whose length is evaluated in closed form with mpmath.  The
   chain is re-validated; contacts with negative turning are dropped and
   penetrated discs are added until the chain is locally geodesic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import mpmath
import numpy as np

DPS = 50
SWEEPS_PER_LEVEL = 4000
LEVELS = (32, 64, 128, 256)


class CorridorError(RuntimeError):
    """The disc families cannot be separated by an x-monotone curve."""


@dataclass(frozen=True)
class Disc:
    x: float
    y: float
    side: int  # +1: below the curve, -1: above
    label: object = None


@dataclass
class TautResult:
    length: mpmath.mpf
    contacts: tuple = ()
    band_lengths: list[list[float]] = field(default_factory=list, repr=False)
    turns: tuple = field(default=(), repr=False)

    @property
    def straight(self) -> bool:
        return all(abs(t) < mpmath.mpf(10) ** -30 for t in self.turns)

    def __float__(self) -> float:
        return float(self.length)


def _images(discs: Sequence[Disc], period: float, reach: int = 2):
    for k in range(-reach, reach + 1):
        for i, d in enumerate(discs):
            yield i, k, d.x + k * period, d.y, d.side


def _envelopes(xs: np.ndarray, discs, period, r):
    floor = np.full(xs.shape, -np.inf)
    ceil = np.full(xs.shape, np.inf)
    floor_id = np.full(xs.shape, -1)
    ceil_id = np.full(xs.shape, -1)
    for i, k, cx, cy, side in _images(discs, period):
        dx = xs - cx
        mask = np.abs(dx) < r
        if not mask.any():
            continue
        half = np.sqrt(np.maximum(r * r - dx[mask] ** 2, 0.0))
        if side > 0:
            top = cy + half
            upd = top > floor[mask]
            idx = np.flatnonzero(mask)[upd]
            floor[idx] = top[upd]
            floor_id[idx] = i
        else:
            bot = cy - half
            upd = bot < ceil[mask]
            idx = np.flatnonzero(mask)[upd]
            ceil[idx] = bot[upd]
            ceil_id[idx] = i
    return floor, ceil, floor_id, ceil_id


def _polyline_length(ys: np.ndarray, dx: float) -> float:
    dy = np.diff(np.append(ys, ys[0]))
    return float(np.sum(np.sqrt(dx * dx + dy * dy)))


def rubber_band(discs: Sequence[Disc], period: float, r: float, y0: float = 0.0):
    """Discrete taut string.

    Returns (ys, xs, contact disc indices, history) where ``history`` holds
    one list of polyline lengths per grid level.
    """
    ys = None
    history: list[list[float]] = []
    for n in LEVELS:
        xs = np.arange(n) * (period / n)
        lo, hi, lo_id, hi_id = _envelopes(xs, discs, period, r)
        if np.any(lo > hi):
            raise CorridorError("disc families overlap in x; no monotone separating curve")
        if ys is None:
            ys = np.clip(np.full(n, y0), lo, hi)
        else:
            # refine: linear interpolation onto the finer grid, then clamp
            prev = ys
            ys = np.empty(n)
            ys[0::2] = prev
            ys[1::2] = 0.5 * (prev + np.roll(prev, -1))
            ys = np.clip(ys, lo, hi)
        dx = period / n
        level = [_polyline_length(ys, dx)]
        history.append(level)
        even = np.arange(0, n, 2)
        odd = np.arange(1, n, 2)
        for _ in range(SWEEPS_PER_LEVEL):
            for idx in (even, odd):
                mid = 0.5 * (ys[(idx - 1) % n] + ys[(idx + 1) % n])
                ys[idx] = np.clip(mid, lo[idx], hi[idx])
            level.append(_polyline_length(ys, dx))
            if abs(level[-2] - level[-1]) < 1e-15:
                break
    tol = 1e-9
    contacts: list[int] = []
    for i in range(len(xs)):
        hit = None
        if lo_id[i] >= 0 and ys[i] - lo[i] < tol:
            hit = lo_id[i]
        elif hi_id[i] >= 0 and hi[i] - ys[i] < tol:
            hit = hi_id[i]
        if hit is not None and (not contacts or contacts[-1] != hit):
            contacts.append(int(hit))
    if len(contacts) > 1 and contacts[0] == contacts[-1]:
        contacts.pop()
    return ys, xs, contacts, history


class _Chain:
    """Closed-form tangent chain through an ordered periodic list of contacts."""

    def __init__(self, discs, order, period, r):
        self.discs = discs
        self.order = list(order)
        self.period = mpmath.mpf(period)
        self.r = mpmath.mpf(r)

    def centers(self):
        # unwrap x so the contact sequence is increasing within one period
        out = []
        last = None
        for i in self.order:
            d = self.discs[i]
            x = mpmath.mpf(d.x)
            if last is not None:
                while x < last:
                    x += self.period
            out.append((x, mpmath.mpf(d.y), d.side))
            last = x
        return out

    def evaluate(self):
        cs = self.centers()
        k = len(cs)
        if k == 0:
            return self.period, [], []
        segs = []
        for i in range(k):
            x1, y1, s1 = cs[i]
            x2, y2, s2 = cs[(i + 1) % k]
            if i + 1 >= k:
                x2 += self.period
            dxv, dyv = x2 - x1, y2 - y1
            D = mpmath.sqrt(dxv * dxv + dyv * dyv)
            gap = (s1 - s2) * self.r
            if abs(gap) >= D:
                raise CorridorError("contact discs too close for a separating tangent")
            theta = mpmath.atan2(dyv, dxv) - mpmath.asin(gap / D)
            seglen = mpmath.sqrt(D * D - gap * gap)
            nx, ny = -mpmath.sin(theta), mpmath.cos(theta)
            p = (x1 + s1 * self.r * nx, y1 + s1 * self.r * ny)
            q = (x2 + s2 * self.r * nx, y2 + s2 * self.r * ny)
            segs.append((theta, seglen, p, q))
        turns = []
        for i in range(k):
            th_in = segs[i - 1][0]
            th_out = segs[i][0]
            t = cs[i][2] * (th_in - th_out)
            t = (t + mpmath.pi) % (2 * mpmath.pi) - mpmath.pi
            turns.append(t)
        length = sum(s[1] for s in segs) + self.r * sum(turns)
        return length, turns, segs


def _penetrations(discs, segs, period, r):
    """(depth, disc index, x) for discs cut by chain segments, deepest first."""
    hits = []
    for k in range(-2, 3):
        for i, d in enumerate(discs):
            cx = mpmath.mpf(d.x) + k * period
            c = (cx, mpmath.mpf(d.y))
            for theta, seglen, p, q in segs:
                px, py = p
                qx, qy = q
                vx, vy = qx - px, qy - py
                L2 = vx * vx + vy * vy
                t = ((c[0] - px) * vx + (c[1] - py) * vy) / L2 if L2 else 0
                t = min(max(t, 0), 1)
                ex, ey = px + t * vx - c[0], py + t * vy - c[1]
                dist = mpmath.sqrt(ex * ex + ey * ey)
                # inputs are floats: penetrations below 1e-12 are round-off
                if dist < r * (1 - mpmath.mpf(10) ** (-12)):
                    hits.append((r - dist, i, cx))
    hits.sort(key=lambda h: -h[0])
    return hits


def taut_periodic_curve(discs: Sequence[Disc], period: float, r: float, y0: float = 0.0,
                        max_rounds: int = 50) -> TautResult:
    with mpmath.workdps(DPS):
        _, _, order, history = rubber_band(discs, period, r, y0)
        for _ in range(max_rounds):
            chain = _Chain(discs, order, period, r)
            length, turns, segs = chain.evaluate()
            if turns and min(turns) < -mpmath.mpf(10) ** (-30):
                worst = min(range(len(turns)), key=lambda i: turns[i])
                order.pop(worst)
                continue
            if not order:
                segs = [(mpmath.mpf(0), mpmath.mpf(period), (mpmath.mpf(0), mpmath.mpf(y0)),
                         (mpmath.mpf(period), mpmath.mpf(y0)))]
            hits = _penetrations(discs, segs, chain.period, chain.r)
            if hits:
                _, idx, _ = hits[0]
                if idx in order:
                    raise CorridorError("chain penetrates one of its own contacts")
                order.append(idx)
                order.sort(key=lambda i: discs[i].x)
                continue
            return TautResult(+length, tuple(discs[i].label for i in order), history, tuple(turns))
    raise CorridorError("tangent chain did not stabilise")
