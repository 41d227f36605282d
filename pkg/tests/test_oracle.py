import random

import pytest
from hypothesis import given, settings

from spectral_ham.graph import (
    build_complete,
    build_cycle,
    build_path,
    build_petersen,
    extremal_graph,
)
from spectral_ham.oracle import (
    OracleOutOfRange,
    ham_cycle,
    ham_path,
    is_ham_connected,
    is_hamiltonian_cycle,
    is_hamiltonian_path,
)

from conftest import graphs, permuted, random_graph


def test_cycle_examples():
    C5 = build_cycle(5)
    assert is_hamiltonian_cycle(C5, ham_cycle(C5))
    assert ham_cycle(extremal_graph("L", 1, 6)) is None
    P = build_petersen()
    assert ham_cycle(P) is None
    assert ham_cycle(P, method="backtrack") is None


def test_path_examples():
    P4 = build_path(4)
    assert is_hamiltonian_path(P4, ham_path(P4))
    assert ham_path(extremal_graph("N", 1, 6)) is None
    P = build_petersen()
    assert is_hamiltonian_path(P, ham_path(P))
    assert is_hamiltonian_path(P, ham_path(P, method="backtrack"))


def test_ham_connected_examples():
    assert is_ham_connected(build_complete(4))
    assert not is_ham_connected(build_cycle(5))
    assert not is_ham_connected(build_cycle(4))


def test_guards():
    with pytest.raises(OracleOutOfRange):
        ham_cycle(build_complete(25))
    with pytest.raises(OracleOutOfRange):
        ham_cycle(build_complete(21), method="dp")
    with pytest.raises(OracleOutOfRange):
        is_ham_connected(build_complete(17))


def test_large_complete_graph_within_dp_range():
    G = build_complete(20)
    assert is_hamiltonian_cycle(G, ham_cycle(G))


@given(graphs(min_n=3, max_n=10))
def test_cycle_implies_path(G):
    if ham_cycle(G) is not None:
        assert ham_path(G) is not None


def test_engines_agree_on_random_graphs():
    rng = random.Random(1234)
    for _ in range(400):
        n = rng.randint(3, 14)
        G = random_graph(rng, n, rng.uniform(0.15, 0.9))
        cyc_dp, cyc_bt = ham_cycle(G, "dp"), ham_cycle(G, "backtrack")
        assert (cyc_dp is None) == (cyc_bt is None)
        for c in (cyc_dp, cyc_bt):
            if c is not None:
                assert is_hamiltonian_cycle(G, c)
        path_dp, path_bt = ham_path(G, "dp"), ham_path(G, "backtrack")
        assert (path_dp is None) == (path_bt is None)
        for p in (path_dp, path_bt):
            if p is not None:
                assert is_hamiltonian_path(G, p)


@given(graphs(min_n=3, max_n=11))
@settings(max_examples=60)
def test_relabel_invariance(G):
    H = permuted(G, random.Random(G.m))
    assert (ham_cycle(G) is None) == (ham_cycle(H) is None)
    assert (ham_path(G) is None) == (ham_path(H) is None)


def test_ham_connected_matches_pairwise_search():
    rng = random.Random(5)
    for _ in range(30):
        G = random_graph(rng, rng.randint(3, 7), 0.7)
        expected = True
        for s in range(G.n):
            for t in range(s + 1, G.n):
                # a Hamiltonian s-t path is a Hamiltonian cycle of G + {s,t} through that edge
                found = False
                H = G if G.has_edge(s, t) else G.add_edge(s, t)
                from itertools import permutations

                for perm in permutations(range(G.n)):
                    if perm[0] == s and perm[-1] == t and is_hamiltonian_path(G, perm):
                        found = True
                        break
                expected &= found
        assert is_ham_connected(G) == expected
