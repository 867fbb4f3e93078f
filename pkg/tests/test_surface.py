from fractions import Fraction

import pytest

from sphere_kissing.exact import ExactLength
from sphere_kissing.surface import (
    ModelError,
    SphereModel,
    SurfaceParams,
    build,
    constants_report,
    default_radius,
)

ROOT28 = ExactLength.sqrt(28)


def test_default_radius():
    assert default_radius() == (ROOT28 - 4) / (2 * ExactLength.pi())
    assert 0.2055 < float(default_radius()) < 0.2056


def test_constants_report_identities():
    rep = constants_report(SurfaceParams(5))
    assert rep["m"] == ROOT28
    assert rep["belt_length"] == ROOT28
    assert rep["belt_equals_meridian"] is True
    assert rep["r_below_quarter"] is True
    assert rep["h_above_quarter"] is True


@pytest.mark.parametrize("n,r", [(4, None), (0, None), (5, Fraction(1, 2)), (5, Fraction(-1, 10)), (5, 1)])
def test_strict_build_rejects(n, r):
    with pytest.raises(ModelError):
        build(SurfaceParams(n, r))


def test_exploratory_build_allows_bent_meridians():
    model = build(SurfaceParams(6, Fraction(2, 5)), strict=False)
    assert model.r > model.h
    with pytest.raises(ModelError):
        build(SurfaceParams(6, Fraction(1)), strict=False)


def test_chimneys_and_cuts():
    model = build(SurfaceParams(7))
    assert [c.s for c in model.chimneys] == list(range(1, 8))
    assert model.left_cut == Fraction(1, 2) and model.right_cut == Fraction(15, 2)
    assert all(cap.circumference == ROOT28 for cap in model.caps)


def test_cut_meridians_clear_every_chimney():
    model = build(SurfaceParams(9))
    for cut in (model.left_cut, model.right_cut):
        for c in model.chimneys:
            gap = model.axial(cut) - c.axial()
            assert gap * gap > model.h * model.h - ExactLength.rational(Fraction(1, 10 ** 30))
            assert (gap * gap - model.h * model.h).sign() >= 0


def test_json_is_deterministic_and_round_trips():
    a = build(SurfaceParams(8)).to_json()
    b = build(SurfaceParams(8)).to_json()
    assert a == b
    assert SphereModel.from_json(a) == build(SurfaceParams(8))


def test_json_version_checked():
    text = build(SurfaceParams(5)).to_json().replace('"version": 1', '"version": 99')
    with pytest.raises(ModelError):
        SphereModel.from_json(text)
