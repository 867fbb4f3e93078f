import itertools

from hypothesis import given
from hypothesis import strategies as st

import pytest

from sphere_kissing.lattice import (
    UNIT_DIRECTIONS,
    V1,
    V2,
    W,
    Chimney,
    LatticeVec,
    axial_index,
    axial_spacing,
    circumference_squared,
    neighbors_at_distance_two,
    squared_distance_on_cylinder,
    translation,
)
from sphere_kissing.exact import ExactLength


def brute_distance2(i, j, reach=10):
    d = Chimney(j).lift() - Chimney(i).lift()
    return min((d + t * W).squared_length() for t in range(-reach, reach + 1))


def test_basis_and_translation():
    assert V1 == LatticeVec(2, 0) and V2 == LatticeVec(1, 1)
    assert W == LatticeVec(1, 3)
    assert circumference_squared() == 28
    assert axial_spacing() == ExactLength.sqrt(3) / ExactLength.sqrt(28)


def test_parity_enforced():
    with pytest.raises(ValueError):
        LatticeVec(1, 0)


def test_even_rows_rejected():
    with pytest.raises(ValueError, match="not a lattice translation"):
        translation(2)


@pytest.mark.parametrize("i,j,expected", [(1, 1, 0), (1, 2, 4), (1, 3, 4), (1, 4, 4), (1, 5, 12)])
def test_distance_examples(i, j, expected):
    assert squared_distance_on_cylinder(Chimney(i), Chimney(j)) == expected


def test_distance_agrees_with_wide_scan():
    for i, j in itertools.product(range(-6, 7), repeat=2):
        assert squared_distance_on_cylinder(Chimney(i), Chimney(j)) == brute_distance2(i, j)


def test_neighbors_agree_with_scan():
    # every lattice point at squared distance 4 from some lift, scanned directly
    for s in range(-5, 6):
        found = set()
        base = Chimney(s).lift()
        for t in range(-4, 5):
            for a in range(-4, 5):
                for b in range(-4, 5):
                    if (a - b) % 2 == 0:
                        v = LatticeVec(a, b)
                        if v.squared_length() == 4:
                            found.add(Chimney.of(base + v + t * W))
        assert neighbors_at_distance_two(Chimney(s)) == frozenset(found)
        assert {c.s - s for c in found} == {-3, -2, -1, 1, 2, 3}


def test_unit_directions_are_all_length_two_vectors():
    scan = {LatticeVec(a, b) for a in range(-3, 4) for b in range(-3, 4)
            if (a - b) % 2 == 0 and a * a + 3 * b * b == 4}
    assert set(UNIT_DIRECTIONS) == scan


vecs = st.builds(lambda a, b: LatticeVec(a, 2 * b + (a % 2)), st.integers(-50, 50), st.integers(-50, 50))


@given(vecs, st.integers(-20, 20))
def test_orbit_index_is_translation_invariant(v, t):
    assert axial_index(v + t * W) == axial_index(v)
    assert Chimney.of(Chimney.of(v).lift()) == Chimney.of(v)


@given(vecs, vecs)
def test_equal_index_iff_same_orbit(u, v):
    d = v - u
    same_orbit = 3 * d.a == d.b
    assert (axial_index(u) == axial_index(v)) == same_orbit


@given(vecs)
def test_squared_length_is_nonnegative_integer(v):
    assert isinstance(v.squared_length(), int) and v.squared_length() >= 0


@given(st.integers(-100, 100))
def test_lift_has_its_index(s):
    assert axial_index(Chimney(s).lift()) == s
    assert Chimney(s).axial() == 2 * s * axial_spacing()
