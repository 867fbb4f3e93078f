import math

import pytest

from sphere_kissing.exact import ExactLength
from sphere_kissing.rows import row_feasibility
from sphere_kissing.surface import default_radius


def test_three_rows_feasible():
    rec = row_feasibility(3)
    assert rec.feasible and rec.obstructions == []
    assert rec.r == (ExactLength.sqrt(28) - 4) / (2 * ExactLength.pi()) == default_radius()
    assert rec.shorter_belts == 0


def test_one_row_too_short():
    rec = row_feasibility(1)
    assert rec.m == 2 and rec.r.sign() < 0
    assert not rec.feasible and rec.obstructions[0].startswith("negative radius")


def test_five_rows_fail_clearance():
    rec = row_feasibility(5)
    assert rec.m == ExactLength.sqrt(76)
    assert 0.750 < float(rec.r) < 0.751
    assert not rec.feasible
    assert any(o.startswith("clearance failure") for o in rec.obstructions)
    # the bent meridian through a gap is strictly longer than m_5
    assert rec.taut_meridian is not None and rec.taut_meridian > math.sqrt(76)


@pytest.mark.parametrize("k", [7, 9, 11])
def test_many_rows_fail(k):
    rec = row_feasibility(k)
    assert not rec.feasible
    assert any(o.startswith("discs overlap") for o in rec.obstructions)
    assert any(o.startswith("clearance failure") for o in rec.obstructions)


@pytest.mark.parametrize("k", [0, 2, 4])
def test_even_or_zero_rows_rejected(k):
    with pytest.raises(ValueError):
        row_feasibility(k)
