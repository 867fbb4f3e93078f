import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.spatial import Delaunay

from sphere_kissing.census import census
from sphere_kissing.upper_bound import (
    ArcSystem,
    CurvePartition,
    construction_tightness,
    euler_edge_bound,
    laminar_compatible,
    laminar_max,
    laminar_max_exhaustive,
    octahedron,
    path_graph,
    tetrahedron,
    upper_bound_report,
)


def clique_oracle(n):
    """Maximum clique of pairwise-disjoint-or-nested splits, via networkx."""
    pts = frozenset(range(1, n + 1))
    splits = set()
    for k in range(3, n - 2):
        for side in itertools.combinations(sorted(pts), k):
            side = frozenset(side)
            splits.add(min(side, pts - side, key=lambda s: sorted(s)))
    splits = sorted(splits, key=sorted)

    def ok(x, y):
        return any(not (a & b) for a in (x, pts - x) for b in (y, pts - y))

    g = nx.Graph()
    g.add_nodes_from(range(len(splits)))
    g.add_edges_from((i, j) for i, j in itertools.combinations(range(len(splits)), 2) if ok(splits[i], splits[j]))
    if not splits:
        return 0
    return nx.max_weight_clique(g, weight=None)[1]


def test_partition_canonicalization():
    assert CurvePartition(6, frozenset({4, 5, 6})) == CurvePartition(6, frozenset({1, 2, 3}))
    p = CurvePartition(7, frozenset({1, 2}))
    assert p.bounds_two and p.essential
    assert not CurvePartition(7, frozenset({3})).essential


def test_laminar_examples():
    assert laminar_compatible(CurvePartition(8, frozenset({1, 2, 3})), CurvePartition(8, frozenset({1, 2, 3, 4})))
    assert laminar_compatible(CurvePartition(8, frozenset({1, 2, 3})), CurvePartition(8, frozenset({5, 6, 7})))
    assert not laminar_compatible(CurvePartition(8, frozenset({1, 2, 3})), CurvePartition(8, frozenset({3, 4, 5})))
    with pytest.raises(ValueError):
        laminar_compatible(CurvePartition(8, frozenset({1, 2, 3})), CurvePartition(9, frozenset({1, 2, 3})))


sides = st.integers(6, 10).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n), min_size=1, max_size=n - 1),
                        st.sets(st.integers(1, n), min_size=1, max_size=n - 1), st.permutations(range(1, n + 1))))


@given(sides)
def test_compatibility_is_symmetric_and_relabelling_invariant(data):
    n, a, b, perm = data
    p, q = CurvePartition(n, frozenset(a)), CurvePartition(n, frozenset(b))
    relabel = dict(zip(range(1, n + 1), perm))
    p2 = CurvePartition(n, frozenset(relabel[i] for i in a))
    q2 = CurvePartition(n, frozenset(relabel[i] for i in b))
    assert laminar_compatible(p, q) == laminar_compatible(q, p) == laminar_compatible(p2, q2)


@pytest.mark.parametrize("n", range(5, 8))
def test_laminar_max_matches_subset_enumeration(n):
    assert laminar_max(n) == laminar_max_exhaustive(n) == n - 5


@pytest.mark.parametrize("n", range(5, 11))
def test_laminar_max_matches_clique_oracle(n):
    assert laminar_max(n) == clique_oracle(n) == n - 5


def test_laminar_max_limits():
    assert laminar_max(13) is None
    with pytest.raises(ValueError):
        laminar_max(4)


def test_platonic_maps():
    t = euler_edge_bound(tetrahedron())
    assert (t["V"], t["E"], t["F"], t["triangulated"], t["attained"]) == (4, 6, 4, True, True)
    o = euler_edge_bound(octahedron())
    assert (o["V"], o["E"], o["F"], o["triangulated"]) == (6, 12, 8, True)


def test_tree_is_far_from_the_bound():
    rep = euler_edge_bound(path_graph(5))
    assert rep["F"] == 1 and not rep["triangulated"] and not rep["attained"]


def test_disconnected_map_rejected():
    sys = ArcSystem.from_plane([(0, 0), (1, 0), (5, 5), (6, 5)], [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        euler_edge_bound(sys)


def delaunay_map(n, seed):
    """Triangulation of the sphere: Delaunay of random points inside a big outer triangle."""
    rng = np.random.default_rng(seed)
    outer = np.array([[0.0, 0.0], [10.0, 0.0], [5.0, 9.0]])
    inner = []
    while len(inner) < n - 3:
        u, v = rng.random(2)
        if u + v < 1:
            inner.append(outer[0] + u * (outer[1] - outer[0]) + v * (outer[2] - outer[0]))
    pts = np.vstack([outer] + ([np.array(inner)] if inner else []))
    edges = set()
    for simplex in Delaunay(pts).simplices:
        for a, b in itertools.combinations(sorted(int(i) for i in simplex), 2):
            edges.add((a, b))
    return ArcSystem.from_plane([tuple(p) for p in pts], sorted(edges))


@pytest.mark.parametrize("n", range(4, 13))
@pytest.mark.parametrize("seed", range(3))
def test_triangulations_have_three_n_minus_six_edges(n, seed):
    rep = euler_edge_bound(delaunay_map(n, seed))
    assert rep["triangulated"] and rep["E"] == 3 * (n - 2) and rep["chi"] == 2


@pytest.mark.parametrize("n", [5, 6, 10])
def test_construction_attains_both_bounds(models, n):
    model = models(n)
    rep = construction_tightness(census(model), model)
    assert rep["a_count"] == rep["a_bound"] == 3 * (n - 2)
    assert rep["non_a_count"] == rep["non_a_bound"] == n - 5
    assert rep["arcs_simple"] and rep["arc_triangulation"] and rep["non_a_laminar"]
    assert rep["attains"] and rep["total"] == 4 * n - 11


def test_upper_bound_report():
    rep = upper_bound_report(9)
    assert rep == {"n": 9, "laminar_max": 4, "edge_bound": 21, "total_bound": 25, "construction_attains": None}
    assert upper_bound_report(40)["laminar_max"] is None
