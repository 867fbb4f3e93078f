import math
import warnings
from fractions import Fraction

import cvxpy as cp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BENT_RADIUS
from sphere_kissing.census import group_by_homotopy
from sphere_kissing.exact import ExactLength
from sphere_kissing.geodesics import (
    BeltClass,
    BelowSystoleWarning,
    IncompleteEnumerationWarning,
    Kind,
    MeridianClass,
    belt_length,
    belt_shapes,
    classify,
    enumerate_short_classes,
    exterior_angles,
    homotopic,
    meridian_shortest,
    winding_lower_bound_squared,
)
from sphere_kissing.lattice import W, Chimney, LatticeVec, nearest_displacement
from sphere_kissing.surface import default_radius
from sphere_kissing.taut import Disc, rubber_band, taut_periodic_curve

R = default_radius()
ROOT28 = ExactLength.sqrt(28)


def belt(*idx):
    """Belt around chimneys whose consecutive members are lattice neighbours."""
    pts = [Chimney(idx[0]).lift()]
    for a, b in zip(idx, idx[1:]):
        pts.append(pts[-1] + nearest_displacement(Chimney(a), Chimney(b)))
    return BeltClass(frozenset(pts))


def cauchy_perimeter(points, r):
    """Perimeter of (hull + disc of radius r) as the integral of its support function."""
    xy = np.array([v.xy() for v in points])
    t = np.linspace(0.0, 2 * np.pi, 400_001)
    support = (xy @ np.vstack([np.cos(t), np.sin(t)])).max(axis=0) + r
    return np.trapezoid(support, t)


# -- belts -------------------------------------------------------------------


def test_pair_belt_has_meridian_length():
    assert belt_length(belt(1, 2).enclosed, R) == ROOT28


def test_triangle_belt():
    tri = belt(1, 2, 4)
    assert len(tri.hull) == 3
    assert belt_length(tri.enclosed, R) == 2 + ROOT28
    assert belt_length(tri.enclosed, R) == 6 + 2 * ExactLength.pi() * R


def test_collinear_triple_belt():
    # chimneys 1, 2, 3 lie on a lattice line: twice the span plus 2*pi*r
    assert len(belt(1, 2, 3).hull) == 2
    assert belt_length(belt(1, 2, 3).enclosed, R) == 4 + ROOT28


def test_exterior_angles_sum_to_full_turn():
    for b in (belt(1, 2), belt(1, 2, 3), belt(1, 2, 3, 4)):
        assert sum(exterior_angles(b.hull)) == pytest.approx(2 * math.pi)


shapes = st.lists(st.builds(lambda a, b: LatticeVec(a, 2 * b + (a % 2)), st.integers(-4, 4), st.integers(-2, 2)),
                  min_size=1, max_size=6).map(frozenset)
radii = st.fractions(min_value=Fraction(1, 100), max_value=Fraction(9, 10), max_denominator=100)


@given(shapes, radii)
@settings(max_examples=40, deadline=None)
def test_belt_length_matches_support_function_integral(shape, r):
    exact = belt_length(shape, ExactLength.rational(r))
    assert float(exact) == pytest.approx(cauchy_perimeter(shape, float(r)), rel=1e-8)


@given(shapes, st.builds(lambda a, b: LatticeVec(a, 2 * b + (a % 2)), st.integers(-30, 30), st.integers(-30, 30)))
def test_belt_length_translation_invariant(shape, v):
    assert belt_length({p + v for p in shape}, R) == belt_length(shape, R)


@given(shapes, shapes)
def test_belt_length_monotone_under_inclusion(a, b):
    assert belt_length(a, R) <= belt_length(a | b, R)


@given(st.builds(lambda a, b: LatticeVec(a, 2 * b + (a % 2)), st.integers(-20, 20), st.integers(-10, 10)))
def test_pair_formula(v):
    if v == LatticeVec(0, 0):
        return
    shape = {LatticeVec(0, 0), v}
    assert belt_length(shape, R) == 2 * v.length() + 2 * ExactLength.pi() * R


def test_shape_enumeration_at_meridian_budget_is_pairs_only():
    budget = ROOT28 - 2 * ExactLength.pi() * R
    found = belt_shapes(budget)
    assert all(len(s) == 2 for s in found)
    assert len(found) == 3
    assert all((max(s) - min(s)).squared_length() == 4 for s in found)


# -- meridians -----------------------------------------------------------------


def test_default_meridians_are_straight(models):
    model = models(12)
    for j in range(13):
        length, straight = meridian_shortest(model, j)
        assert straight and length == ROOT28


def _convex_oracle(model, j, samples=6000):
    """Shortest x-monotone periodic polyline above chimney j's disc and below chimney j+1's, by SOCP."""
    m, h, r = float(model.m), float(model.h), float(model.r)
    xs = np.arange(samples) * (m / samples)
    lo = np.full(samples, -np.inf)
    hi = np.full(samples, np.inf)
    for s, yc, side in ((j, -h, 1), (j + 1, h, -1)):
        cx = (Chimney(s).lift().dot(W) / m) % m
        for shift in (-m, 0.0, m):
            dx = xs - (cx + shift)
            inside = np.abs(dx) < r
            half = np.sqrt(np.maximum(r * r - dx ** 2, 0.0))
            if side > 0:
                lo = np.where(inside, np.maximum(lo, yc + half), lo)
            else:
                hi = np.where(inside, np.minimum(hi, yc - half), hi)
    y = cp.Variable(samples)
    dy = cp.hstack([y[1:] - y[:-1], cp.reshape(y[0] - y[-1], (1,), order="C")])
    dx = m / samples
    objective = cp.sum(cp.norm(cp.vstack([np.full(samples, dx), dy]), axis=0))
    cons = [y[i] >= lo[i] for i in np.flatnonzero(np.isfinite(lo))]
    cons += [y[i] <= hi[i] for i in np.flatnonzero(np.isfinite(hi))]
    prob = cp.Problem(cp.Minimize(objective), cons)
    prob.solve()
    return prob.value


def test_bent_meridians_are_longer_than_the_circumference(models):
    model = models(6, BENT_RADIUS, False)
    assert model.r > model.h
    for j in range(1, 6):
        g = classify(model, MeridianClass(j))
        if g.kind is not Kind.MERIDIAN:
            continue
        assert not g.straight
        assert float(g.shortest_length) > float(ROOT28)
        assert float(g.shortest_length) == pytest.approx(_convex_oracle(model, j), abs=1e-5)


def test_end_gaps_stay_straight_when_bent(models):
    model = models(6, BENT_RADIUS, False)
    for j in (0, 6):
        assert meridian_shortest(model, j) == (ROOT28, True)


def test_band_length_never_increases_within_a_level(models):
    model = models(6, BENT_RADIUS, False)
    m, h, r = float(model.m), float(model.h), float(model.r)
    discs = [Disc((Chimney(s).lift().dot(W) / m) % m, (2 * s - 7) * h, 1 if s <= 3 else -1, s) for s in (3, 4)]
    _, _, _, history = rubber_band(discs, m, r)
    for level in history:
        assert all(b <= a + 1e-12 for a, b in zip(level, level[1:]))


def test_taut_curve_without_obstacles_is_straight():
    res = taut_periodic_curve([Disc(1.0, -2.0, 1), Disc(3.0, 2.0, -1)], 5.0, 0.5)
    assert res.straight and float(res) == pytest.approx(5.0)


def test_taut_curve_around_one_disc():
    # obstacles on one side only: the line along the top of the disc is optimal
    res = taut_periodic_curve([Disc(2.0, 0.0, 1)], 10.0, 1.0)
    assert float(res) == pytest.approx(10.0)


# -- classification ------------------------------------------------------------


def test_classify_examples(models):
    model = models(6)
    assert classify(model, MeridianClass(0)).kind is Kind.CONTRACTIBLE
    assert classify(model, MeridianClass(6)).kind is Kind.CONTRACTIBLE
    assert classify(model, MeridianClass(1)).kind is Kind.INESSENTIAL
    g = classify(model, MeridianClass(3))
    assert g.kind is Kind.MERIDIAN and g.partition == (1, 2, 3)
    b = classify(model, belt(1, 2))
    assert b.kind is Kind.BELT and b.partition == (1, 2) and b.shortest_length == ROOT28
    assert classify(model, belt(2, 3, 4)).partition == (1, 5, 6)


def test_classify_rejects_out_of_band(models):
    model = models(6)
    with pytest.raises(ValueError):
        classify(model, belt(6, 7))
    with pytest.raises(ValueError):
        classify(model, MeridianClass(7))


def test_homotopic_examples(models):
    model = models(6)
    left = classify(model, belt(1, 2))
    mer2 = classify(model, MeridianClass(2))
    right = classify(model, belt(5, 6))
    mer4 = classify(model, MeridianClass(4))
    assert homotopic(model, left, mer2)
    assert homotopic(model, right, mer4)
    assert not homotopic(model, left, classify(model, belt(2, 3)))
    assert not homotopic(model, mer2, classify(model, MeridianClass(3)))
    assert homotopic(model, left, left)
    with pytest.raises(ValueError):
        homotopic(model, left, classify(model, MeridianClass(0)))


@given(st.integers(5, 14), st.data())
@settings(max_examples=30, deadline=None)
def test_homotopy_is_symmetric(n, data):
    from sphere_kissing.surface import SurfaceParams, build
    model = build(SurfaceParams(n))
    classes = enumerate_short_classes(model, model.m)
    g1 = data.draw(st.sampled_from(classes))
    g2 = data.draw(st.sampled_from(classes))
    assert homotopic(model, g1, g2) == homotopic(model, g2, g1)


# -- enumeration ---------------------------------------------------------------


def test_enumeration_at_meridian_length(models):
    model = models(5)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        raw = enumerate_short_classes(model, ROOT28)
    assert all(g.shortest_length == ROOT28 for g in raw)
    assert all(len(g.partition) == 2 for g in raw if g.kind is Kind.BELT)
    assert len(group_by_homotopy(model, raw)) == 9


def test_enumeration_above_meridian_length_includes_triples(models):
    model = models(7)
    with pytest.warns(IncompleteEnumerationWarning):
        raw = enumerate_short_classes(model, 2 + ROOT28)
    triples = [g for g in raw if g.kind is Kind.BELT and len(g.curve.enclosed) == 3]
    assert triples and all(g.shortest_length == 2 + ROOT28 for g in triples)


def test_enumeration_below_meridian_length_is_empty(models):
    with pytest.warns(BelowSystoleWarning):
        assert enumerate_short_classes(models(5), 5) == []


def test_enumeration_refuses_double_windings(models):
    with pytest.raises(ValueError):
        enumerate_short_classes(models(5), 2 * ROOT28)


def test_non_gap_windings_exceed_cutoff(models):
    model = models(5)
    assert winding_lower_bound_squared(model) > 28
