import random
from fractions import Fraction

import pytest

from spectral_ham.certifier import (
    SoundnessError,
    VerdictKind,
    certify_chvatal,
    certify_cycle,
    certify_li_ning,
    certify_ore,
    certify_path,
    li_ning_threshold,
    match_extremal,
)
from spectral_ham.graph import (
    Family,
    build_complete,
    build_cycle,
    build_edgeless,
    build_star,
    disjoint_union,
    extremal_graph,
    join,
)
from spectral_ham.oracle import ham_cycle, ham_path, is_hamiltonian_cycle, is_hamiltonian_path
from spectral_ham.spectral import spectral_radius

from conftest import permuted, random_graph


def test_match_examples():
    M = extremal_graph("M", 2, 9)
    m = match_extremal(M, 2)
    assert m.family is Family.M and m.l == 2
    u, v = 6, 7  # two Z vertices
    assert match_extremal(M.remove_edge(u, v), 2) is None
    assert match_extremal(build_complete(9), 2) is None


@pytest.mark.parametrize("family", ["L", "M", "N", "SPLIT"])
def test_match_survives_relabelling(family):
    rng = random.Random(family)
    for k in (1, 2, 3):
        for n in range(2 * k + 2, 2 * k + 8):
            G = permuted(extremal_graph(family, k, n), rng)
            m = match_extremal(G, k, (family,))
            assert m is not None and m.family is Family.parse(family)
            X, Y, Z = m.partition
            assert sorted(X + Y + Z) == list(range(n))


def test_certify_cycle_examples():
    v = certify_cycle(build_complete(6), 1)
    assert v.kind is VerdictKind.CERTIFIED_CYCLE
    assert is_hamiltonian_cycle(build_complete(6), v.certificate)
    v = certify_cycle(extremal_graph("M", 1, 6), 1)
    assert v.kind is VerdictKind.EXCEPTIONAL and v.exceptional_family is Family.M
    v = certify_cycle(build_cycle(6), 1)
    assert v.kind is VerdictKind.INCONCLUSIVE and v.premises.failing_premise == "spectral"


def test_certify_path_examples():
    v = certify_path(build_complete(7), 1)
    assert v.kind is VerdictKind.CERTIFIED_PATH
    assert is_hamiltonian_path(build_complete(7), v.certificate)
    v = certify_path(disjoint_union(build_complete(6), build_complete(2)), 1)
    assert v.kind is VerdictKind.EXCEPTIONAL and v.exceptional_family is Family.SPLIT
    assert v.premises.lambda_lo == 5


def test_certify_path_n1_7():
    G = extremal_graph("N", 1, 7)
    est = spectral_radius(G)
    v = certify_path(G, 1)
    if est.lambda_lo >= 4:
        assert v.kind is VerdictKind.EXCEPTIONAL and v.exceptional_family is Family.N
    else:
        assert v.kind is VerdictKind.INCONCLUSIVE
    assert ham_path(G) is None


def test_n_bound_premise():
    v = certify_cycle(build_complete(5), 1)
    assert v.kind is VerdictKind.INCONCLUSIVE and v.premises.failing_premise == "n-bound"


def test_minimum_degree_guard():
    with pytest.raises(ValueError):
        certify_cycle(build_cycle(8), 3)
    with pytest.raises(ValueError):
        certify_cycle(build_edgeless(8))


def test_path_theorem_counterexample_is_reported():
    # K_3 v K5-bar at k=1 meets every premise with equality and has no Hamiltonian path
    G = join(build_complete(3), build_edgeless(5))
    assert ham_path(G) is None
    with pytest.raises(SoundnessError):
        certify_path(G, 1)
    v = certify_path(G)
    assert v.kind is VerdictKind.INCONCLUSIVE and v.premises.failing_premise == "n-bound"


def test_li_ning_examples():
    v = certify_li_ning(extremal_graph("M", 2, 20), 2)
    assert v.kind is VerdictKind.EXCEPTIONAL and v.exceptional_family is Family.M
    v = certify_li_ning(build_complete(20), 2)
    assert v.kind is VerdictKind.CERTIFIED_CYCLE
    v = certify_li_ning(build_star(9), 0, mode="path")
    assert v.kind is VerdictKind.INCONCLUSIVE
    lo, hi = li_ning_threshold(Family.N, 0, 10)
    assert lo <= 8 <= hi


def test_li_ning_threshold_below_complete():
    lo, hi = li_ning_threshold(Family.M, 2, 20)
    assert hi < 19


def test_ore_and_chvatal_verdicts():
    assert certify_ore(build_cycle(4)).kind is VerdictKind.CERTIFIED_CYCLE
    assert certify_ore(build_star(3)).kind is VerdictKind.INCONCLUSIVE
    assert certify_chvatal(build_complete(5)).kind is VerdictKind.CERTIFIED_CYCLE
    v = certify_chvatal(build_star(3))
    assert v.kind is VerdictKind.INCONCLUSIVE and "s=1" in v.notes[0]
    assert certify_chvatal(build_complete(2), "path").kind is VerdictKind.CERTIFIED_PATH


def test_certified_verdicts_agree_with_oracle():
    rng = random.Random(99)
    seen = 0
    for _ in range(300):
        n = rng.randint(7, 13)
        G = random_graph(rng, n, rng.uniform(0.6, 1.0))
        if G.min_degree < 1:
            continue
        for certify, oracle in ((certify_cycle, ham_cycle), (certify_path, ham_path)):
            v = certify(G, 1)
            if v.certified:
                seen += 1
                assert oracle(G) is not None
            if v.kind is VerdictKind.EXCEPTIONAL:
                assert oracle(G) is None
    assert seen > 50


def test_cycle_and_path_theorems_are_consistent():
    # the cycle premise at k implies the path premise at k, so a certified cycle
    # must come with a certified path unless the path side is exceptional
    rng = random.Random(4)
    for _ in range(200):
        G = random_graph(rng, rng.randint(8, 12), rng.uniform(0.7, 1.0))
        if G.min_degree < 1:
            continue
        c, p = certify_cycle(G, 1), certify_path(G, 1)
        if c.certified and p.premises.n_bound_held:
            assert p.kind in (VerdictKind.CERTIFIED_PATH, VerdictKind.EXCEPTIONAL)


def test_to_dict_key_order():
    d = certify_cycle(extremal_graph("M", 1, 6), 1).to_dict()
    assert list(d) == [
        "kind", "theorem", "k", "n", "lambda_lo", "lambda_hi", "threshold",
        "exceptional_family", "partition", "n_bound", "n_bound_held", "comparison",
        "failing_premise", "edge_bound", "edge_bound_held", "notes",
    ]
    assert d["threshold"] == {"exact": "4/1", "float": 4.0}
    d = certify_cycle(build_complete(6), 1).to_dict()
    assert d["certificate_source"] == "oracle" and len(d["certificate"]) == 6
