import random

import pytest
from hypothesis import given, settings

from spectral_ham.closure import (
    OreOutcome,
    chvatal_cycle_witness,
    chvatal_path_witness,
    closure_main_property_check,
    complete_closure_cycle,
    complete_closure_path,
    cycle_from_closure,
    is_two_connected,
    k_closure,
    ore_cycle_check,
    ore_hamconnected_check,
    ore_path_check,
    path_from_closure,
)
from spectral_ham.graph import (
    Graph,
    build_complete,
    build_cycle,
    build_edgeless,
    build_path,
    build_star,
    extremal_graph,
    join,
)
from spectral_ham.oracle import (
    ham_cycle,
    ham_path,
    is_ham_connected,
    is_hamiltonian_cycle,
    is_hamiltonian_path,
)

from conftest import graphs, random_graph


def test_closure_examples():
    closed, trace = k_closure(build_cycle(4), 4)
    assert closed == build_complete(4)
    assert trace.replay(build_cycle(4)) == closed
    assert k_closure(build_edgeless(3), 1)[0] == build_edgeless(3)
    assert k_closure(build_path(4), 4)[0] == build_path(4)


def test_main_property_examples():
    assert closure_main_property_check(build_complete(6), 3)
    assert closure_main_property_check(build_cycle(5), 5)
    assert not closure_main_property_check(build_cycle(4), 4)


@given(graphs(max_n=10))
def test_closure_fixpoint_and_trace(G):
    for k in (G.n - 1, G.n, G.n + 1):
        if k < 0:
            continue
        closed, trace = k_closure(G, k)
        assert closure_main_property_check(closed, k)
        assert G.edges <= closed.edges
        assert trace.replay(G) == closed
        assert all(s >= k for _, _, s in trace.added_edges)
        assert k_closure(closed, k)[0] == closed


def test_closure_order_independence():
    rng = random.Random(7)
    for _ in range(10):
        G = random_graph(rng, 10, 0.45)
        k = G.n
        reference = k_closure(G, k)[0]
        pairs = [(u, v) for u in range(G.n) for v in range(u + 1, G.n)]
        for _ in range(20):
            rng.shuffle(pairs)
            assert k_closure(G, k, order=list(pairs))[0] == reference


def test_ore_examples():
    assert ore_cycle_check(build_cycle(4))
    assert not ore_cycle_check(build_path(4))
    assert not ore_cycle_check(extremal_graph("M", 2, 9))
    with pytest.raises(ValueError):
        ore_cycle_check(build_complete(2))


def test_ore_hamconnected_examples():
    assert ore_hamconnected_check(build_complete(4)) is OreOutcome.HOLDS
    assert ore_hamconnected_check(build_cycle(5)) is OreOutcome.FAILS
    assert ore_hamconnected_check(build_path(4)) is OreOutcome.NOT_2_CONNECTED


def test_ore_hamconnected_on_clique_plus_matching_structure():
    # H = K_l joined with k vertices of degree (l + 1) inside H: here K_2 v C_4
    H = join(build_complete(2), build_cycle(4))
    k, l = 4, 2
    assert all(H.degrees[v] == l + 2 for v in range(l, l + k))
    assert 2 * (l + 2) >= H.n + 1 - 1
    outcome = ore_hamconnected_check(H)
    if outcome is OreOutcome.HOLDS:
        assert is_ham_connected(H)
    assert is_ham_connected(H)


def test_chvatal_examples():
    w = chvatal_cycle_witness(build_star(3))
    assert w is not None and w.s == 1
    assert chvatal_cycle_witness(build_complete(5)) is None
    assert chvatal_cycle_witness(extremal_graph("M", 2, 9)).s == 2
    assert chvatal_path_witness(build_edgeless(2)).s == 1
    assert chvatal_path_witness(build_complete(2)) is None
    assert chvatal_path_witness(extremal_graph("N", 1, 5)).s == 2


def test_degree_conditions_imply_hamiltonicity():
    rng = random.Random(11)
    hits = {"ore": 0, "ore_path": 0, "chv": 0, "chv_path": 0}
    for _ in range(600):
        n = rng.randint(3, 9)
        G = random_graph(rng, n, rng.uniform(0.3, 1.0))
        if ore_cycle_check(G):
            hits["ore"] += 1
            assert ham_cycle(G) is not None
        if ore_path_check(G):
            hits["ore_path"] += 1
            assert ham_path(G) is not None
        if chvatal_cycle_witness(G) is None:
            hits["chv"] += 1
            assert ham_cycle(G) is not None
        if chvatal_path_witness(G) is None:
            hits["chv_path"] += 1
            assert ham_path(G) is not None
        if ore_hamconnected_check(G) is OreOutcome.HOLDS:
            assert is_ham_connected(G)
    assert min(hits.values()) > 20


def test_unwinding_examples():
    G = build_cycle(4)
    closed, trace = k_closure(G, 4)
    cyc = cycle_from_closure(G, trace, [0, 2, 1, 3])
    assert is_hamiltonian_cycle(G, cyc)
    empty = k_closure(build_complete(5), 5)[1]
    assert cycle_from_closure(build_complete(5), empty, [0, 1, 2, 3, 4]) == [0, 1, 2, 3, 4]


def test_unwinding_on_ore_saturated_random_graphs():
    rng = random.Random(10)
    done = 0
    while done < 40:
        G = random_graph(rng, 10, rng.uniform(0.45, 0.8))
        cyc = complete_closure_cycle(G)
        if cyc is None:
            continue
        assert is_hamiltonian_cycle(G, cyc)
        done += 1


@given(graphs(min_n=2, max_n=12, min_p=0.3))
@settings(max_examples=80)
def test_unwound_paths_are_paths(G):
    path = complete_closure_path(G)
    if path is not None:
        assert is_hamiltonian_path(G, path)
    cyc = complete_closure_cycle(G)
    if cyc is not None:
        assert is_hamiltonian_cycle(G, cyc)


def test_unwinding_beyond_oracle_range():
    rng = random.Random(2)
    G = random_graph(rng, 60, 0.8)
    cyc = complete_closure_cycle(G)
    assert cyc is not None and is_hamiltonian_cycle(G, cyc)
    closed, trace = k_closure(G, G.n - 1)
    assert is_hamiltonian_path(G, path_from_closure(G, trace, list(range(G.n))))


def test_two_connected():
    assert is_two_connected(build_cycle(5))
    assert not is_two_connected(extremal_graph("L", 2, 7))
