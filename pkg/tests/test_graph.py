import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from spectral_ham.graph import (
    ExtremalSpec,
    Family,
    Graph,
    build_complete,
    build_cycle,
    build_edgeless,
    build_extremal,
    build_star,
    degrees_ascending,
    disjoint_union,
    extremal_graph,
    join,
)
from spectral_ham.oracle import ham_path

from conftest import graphs


def test_complete_graphs():
    assert build_complete(3).m == 3 and build_complete(3).degrees == (2, 2, 2)
    assert build_complete(1).n == 1 and build_complete(1).m == 0
    assert build_complete(5).m == 10
    with pytest.raises(ValueError):
        build_complete(0)


def test_edgeless_graphs():
    assert (build_edgeless(4).n, build_edgeless(4).m) == (4, 0)
    assert build_edgeless(1) == build_complete(1)
    assert build_edgeless(2).degrees == (0, 0)
    with pytest.raises(ValueError):
        build_edgeless(0)


def test_join_examples():
    assert join(build_edgeless(1), build_edgeless(1)) == build_complete(2)
    L = join(build_complete(1), disjoint_union(build_complete(3), build_complete(1)))
    assert L.m == 7
    assert sorted(L.degrees) == sorted(extremal_graph("L", 1, 5).degrees)
    J = join(build_complete(2), build_edgeless(2))
    assert J.m == 5 and J.degrees == (3, 3, 2, 2)


def test_disjoint_union_examples():
    G = disjoint_union(build_complete(3), build_edgeless(1))
    assert (G.n, G.m) == (4, 3)
    assert disjoint_union(build_edgeless(1), build_edgeless(1)) == build_edgeless(2)
    assert disjoint_union(build_complete(4), build_complete(2)).m == 7


def test_extremal_examples():
    G, _ = build_extremal(ExtremalSpec(Family.M, 2, 9))
    assert G.min_degree == 2
    assert G.m == comb(7, 2) + 4 == 25
    assert extremal_graph("L", 2, 10).m == comb(8, 2) + comb(3, 2) == 31
    assert ham_path(extremal_graph("N", 1, 5)) is None


def test_extremal_rejects_small_n():
    with pytest.raises(ValueError):
        ExtremalSpec(Family.M, 2, 4)
    with pytest.raises(ValueError):
        ExtremalSpec(Family.L, 0, 5)


def test_degrees_ascending_examples():
    assert list(degrees_ascending(build_star(3))) == [1, 1, 1, 3]
    assert list(degrees_ascending(extremal_graph("M", 1, 5))) == [1, 3, 3, 3, 4]
    assert list(degrees_ascending(build_complete(4))) == [3, 3, 3, 3]


@pytest.mark.parametrize("family", list(Family))
@pytest.mark.parametrize("k", [1, 2, 3])
def test_partition_sizes_and_min_degree(family, k):
    start = 2 * k + 2 if family is Family.SPLIT else 2 * k + 1
    for n in range(start, 16):
        spec = ExtremalSpec(family, k, n)
        G, parts = build_extremal(spec)
        assert tuple(len(p) for p in parts) == spec.sizes
        assert [v for p in parts for v in p] == list(range(n))
        assert G.min_degree == k


def test_split_at_smallest_order_has_smaller_min_degree():
    # K_k + K_{k+1}: the smaller clique has degree k - 1
    assert extremal_graph("SPLIT", 2, 5).min_degree == 1


def _formula(family, k, n):
    K, E = build_complete, build_edgeless

    def plus(a, b):
        if a is None:
            return b
        return disjoint_union(a, b)

    if family is Family.L:
        return join(K(1), disjoint_union(K(n - k - 1), K(k)))
    if family is Family.M:
        return join(K(k), plus(K(n - 2 * k) if n > 2 * k else None, E(k)))
    if family is Family.N:
        return join(K(k), plus(K(n - 2 * k - 1) if n > 2 * k + 1 else None, E(k + 1)))
    return disjoint_union(K(n - k - 1), K(k + 1))


@pytest.mark.parametrize("family", list(Family))
def test_extremal_matches_join_formula(family):
    # the builders order X, Y, Z; the formulas order Y first, so compare after relabeling
    for k in (1, 2, 3):
        for n in range(2 * k + 2, 14):
            G, (X, Y, Z) = build_extremal(ExtremalSpec(family, k, n))
            F = _formula(family, k, n)
            assert sorted(F.degrees) == sorted(G.degrees)
            if family is Family.SPLIT:
                order = list(Z) + list(X)
            elif family is Family.L:
                order = list(Y) + list(Z) + list(X)
            else:
                order = list(Y) + list(Z) + list(X)
            perm = [0] * n
            for new, old in enumerate(order):
                perm[old] = new
            assert G.relabel(perm) == F


@given(graphs(max_n=12))
def test_degree_invariants(G):
    assert sum(G.degrees) == 2 * G.m
    for v in range(G.n):
        assert G.degrees[v] == len(G.neighbors(v))
    assert all(u != v for u, v in G.edges)


@given(graphs(max_n=8), graphs(max_n=8))
@settings(max_examples=50)
def test_join_and_union_counts(G, H):
    assert join(G, H).m == G.m + H.m + G.n * H.n
    assert disjoint_union(G, H).m == G.m + H.m


def test_graph_rejects_loops_and_bad_vertices():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


def test_relabel_and_remove():
    rng = random.Random(3)
    G = build_cycle(6)
    perm = list(range(6))
    rng.shuffle(perm)
    H = G.relabel(perm)
    assert sorted(H.degrees) == sorted(G.degrees) and H.m == G.m
    assert G.remove_edge(0, 1).m == 5
    with pytest.raises(ValueError):
        G.remove_edge(0, 3)
