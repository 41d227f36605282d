import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from spectral_ham.graph import (
    build_complete,
    build_cycle,
    build_edgeless,
    build_path,
    extremal_graph,
)
from spectral_ham.spectral import (
    edge_bound_diagnostic,
    exact_eigenvector,
    hsf_f,
    hsf_monotone_check,
    hsf_upper_bound,
    rayleigh_quotient,
    shifted_is_positive_definite,
    spectral_radius,
)

from conftest import graphs, random_graph


def test_rayleigh_examples():
    assert rayleigh_quotient(build_complete(2), [1, 1]) == 1
    assert rayleigh_quotient(build_edgeless(3), [1, 2, 3]) == 0
    assert rayleigh_quotient(build_cycle(4), [1, 1, 1, 1]) == 2


def test_rayleigh_is_exact():
    assert rayleigh_quotient(build_path(3), [1, 2, 1]) == Fraction(4, 3)


def test_spectral_radius_examples():
    tol = Fraction(1, 10**12)
    est = spectral_radius(build_complete(5), tol)
    assert est.contains(4) and est.width <= tol
    est = spectral_radius(build_path(3), tol)
    assert est.lambda_lo <= math.sqrt(2) <= est.lambda_hi
    assert spectral_radius(extremal_graph("M", 1, 6)).lambda_lo > 4


def test_witness_reproduces_lower_bound():
    G = extremal_graph("L", 2, 9)
    est = spectral_radius(G)
    assert rayleigh_quotient(G, est.witness) == est.lambda_lo


def test_edgeless_and_disconnected():
    assert spectral_radius(build_edgeless(4)).contains(0)
    from spectral_ham.graph import disjoint_union

    G = disjoint_union(build_complete(5), build_cycle(6))
    assert spectral_radius(G).contains(4)


@given(graphs(min_n=1, max_n=14))
@settings(max_examples=80)
def test_interval_contains_numpy_eigenvalue(G):
    est = spectral_radius(G)
    assert est.lambda_lo <= est.lambda_hi
    assert est.width <= Fraction(1, 10**12)
    ref = float(np.max(np.linalg.eigvalsh(G.adjacency_matrix()))) if G.n else 0.0
    assert float(est.lambda_lo) - 1e-9 <= ref <= float(est.lambda_hi) + 1e-9


@given(graphs(min_n=2, max_n=12, min_p=0.2))
@settings(max_examples=60)
def test_edge_monotonicity(G):
    if G.m == 0:
        return
    u, v = sorted(G.edges)[0]
    assert spectral_radius(G.remove_edge(u, v)).lambda_hi <= spectral_radius(G).lambda_hi


def test_shifted_positive_definite_brackets_radius():
    rng = random.Random(3)
    for _ in range(30):
        G = random_graph(rng, rng.randint(2, 10), 0.5)
        est = spectral_radius(G)
        assert shifted_is_positive_definite(G, est.lambda_hi + Fraction(1, 10**9))
        assert not shifted_is_positive_definite(G, est.lambda_lo)


def test_exact_eigenvector_on_integer_eigenvalue():
    G = build_complete(4)
    vec = exact_eigenvector(G, 3)
    assert vec is not None and rayleigh_quotient(G, vec) == 3
    assert exact_eigenvector(build_cycle(5), 3) is None


def test_hsf_examples():
    assert hsf_upper_bound(build_complete(5)) == 4
    assert hsf_upper_bound(build_edgeless(4)) == 0
    assert hsf_upper_bound(build_cycle(5)) == 2
    assert hsf_f(4, 10, 5) == 4
    for n in range(2, 9):
        assert hsf_f(n - 1, n * (n - 1) // 2, n) == n - 1
    assert hsf_monotone_check(10, 6, range(6))


@given(graphs(min_n=1, max_n=14))
@settings(max_examples=80)
def test_hsf_dominates_spectral_radius(G):
    assert hsf_upper_bound(G) >= spectral_radius(G).lambda_lo


@given(graphs(min_n=2, max_n=12))
@settings(max_examples=60)
def test_hsf_decreases_in_minimum_degree(G):
    d = G.min_degree
    for k in range(0, d + 1):
        assert hsf_f(k, G.m, G.n) >= hsf_f(d, G.m, G.n)


def test_hsf_monotone_rejects_bad_input():
    with pytest.raises(ValueError):
        hsf_monotone_check(100, 6, range(6))
    with pytest.raises(ValueError):
        hsf_monotone_check(10, 6, [3, 1])


def test_edge_bound_examples():
    assert edge_bound_diagnostic(6, 1) == Fraction(21, 2)
    assert edge_bound_diagnostic(5, 1) == Fraction(13, 2)
    assert edge_bound_diagnostic(7, 1, "path") == 11
    with pytest.raises(ValueError):
        edge_bound_diagnostic(3, 3)
