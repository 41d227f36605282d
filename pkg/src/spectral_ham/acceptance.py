"""Reproduction suite: nine numbered checks over the families, theorems and bounds.

Each check returns a :class:`CriterionResult`; :func:`run_suite` runs them in
order and shares one registry of every graph whose spectral radius was
computed, which the last check re-examines against the edge/degree bound.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from . import oracle
from .certifier import (
    SoundnessError,
    Verdict,
    VerdictKind,
    certify_chvatal,
    certify_cycle,
    certify_li_ning,
    certify_ore,
    certify_path,
)
from .graph import (
    ExtremalSpec,
    Family,
    Graph,
    build_complete,
    build_cycle,
    build_extremal,
    cycle_n_bound,
    path_n_bound,
)
from .quotient import closed_form_deviation, lift_residual, quotient_lambda
from .spectral import (
    SpectralEstimate,
    hsf_domain_top,
    hsf_monotone_check,
    hsf_upper_bound,
    spectral_radius,
)
from .tightness import deletion_orbits, prop1_verify, prop2_verify, threshold_scan

SUITES = ("paper",)
WIDTH_LIMIT = Fraction(1, 10**12)
AGREEMENT = 1e-9


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0
    data: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.title} -- {self.detail} ({self.seconds:.1f}s)"

    def to_dict(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
            "data": self.data,
        }


class Suite:
    """Shared state: seed, sweep size and the registry of touched graphs."""

    def __init__(self, seed: int = 0, sweep_size: int = 10_000, chain_n_max: int = 14):
        self.seed = seed
        self.sweep_size = sweep_size
        self.chain_n_max = chain_n_max
        self.touched: dict[Graph, SpectralEstimate] = {}

    def estimate(self, G: Graph) -> SpectralEstimate:
        est = self.touched.get(G)
        if est is None:
            est = spectral_radius(G)
            self.touched[G] = est
        return est

    def touch(self, G: Graph, est: SpectralEstimate | None = None) -> None:
        if est is not None:
            self.touched.setdefault(G, est)
        else:
            self.estimate(G)


def _extremal(family: Family, k: int, n: int) -> tuple[Graph, tuple]:
    return build_extremal(ExtremalSpec(family, k, n))


# -- 1: extremal facts ---------------------------------------------------------


def criterion_1(suite: Suite) -> CriterionResult:
    bad = []
    count = 0
    for k in (1, 2, 3):
        for n in range(2 * k + 1, 13):
            for fam in (Family.L, Family.M, Family.N):
                G, _ = _extremal(fam, k, n)
                suite.touch(G)
                count += 1
                if G.min_degree != k:
                    bad.append(f"delta({fam.value}_{k}({n}))={G.min_degree}")
                if fam is Family.N:
                    if oracle.ham_path(G) is not None:
                        bad.append(f"N_{k}({n}) has a Hamiltonian path")
                elif oracle.ham_cycle(G) is not None:
                    bad.append(f"{fam.value}_{k}({n}) has a Hamiltonian cycle")
    detail = f"{count} graphs, minimum degree exact and oracle non-Hamiltonicity confirmed" if not bad else "; ".join(bad[:5])
    return CriterionResult(1, "extremal facts", not bad, detail, data={"graphs": count, "failures": bad})


# -- 2, 3: theorem regime at desk scale --------------------------------------------


def _desk_scale(suite: Suite, number: int, families, bound, n_max) -> CriterionResult:
    bad = []
    rows = 0
    for k in (1, 2):
        n_min = math.ceil(bound(k))
        for fam in families:
            scan = threshold_scan(fam, k, range(n_min, n_max + 1))
            for row in scan.rows:
                rows += 1
                if row.regime != "theorem":
                    bad.append(f"{fam.value} k={k} n={row.n}: {row.regime}")
                for o in row.orbits:
                    if o.lambda_hi - o.lambda_lo > WIDTH_LIMIT:
                        bad.append(f"{fam.value} k={k} n={row.n} {o.orbit}: width {float(o.lambda_hi - o.lambda_lo):.3g}")
                    G = _extremal(fam, k, row.n)[0].remove_edge(*o.edge)
                    suite.touch(G, SpectralEstimate(o.lambda_lo, o.lambda_hi, (), 0, True))
    names = "/".join(f.value for f in families)
    detail = f"{rows} (family, k, n) rows of {names}, every orbit certified below threshold" if not bad else "; ".join(bad[:5])
    return CriterionResult(number, f"{names} deletions below threshold", not bad, detail, data={"rows": rows, "failures": bad})


def criterion_2(suite: Suite) -> CriterionResult:
    return _desk_scale(suite, 2, (Family.M, Family.L), cycle_n_bound, 16)


def criterion_3(suite: Suite) -> CriterionResult:
    return _desk_scale(suite, 3, (Family.N, Family.SPLIT), path_n_bound, 18)


# -- 4, 5: explicit constructions ----------------------------------------------------


def _propositions(suite: Suite, which: int) -> CriterionResult:
    verify = prop1_verify if which == 1 else prop2_verify
    family = Family.M if which == 1 else Family.N
    bad = []
    reports = 0
    for k in (2, 3):
        top = Fraction(k**3, 2) + k + 1 if which == 1 else Fraction(k**3 + k * k, 2) + k + 2
        for n in range(2 * k + 1, math.floor(top) + 1):
            strict_somewhere = False
            for orbit, (u, v) in deletion_orbits(family, k, n):
                r = verify(k, n, u, v)
                reports += 1
                G = _extremal(family, k, n)[0].remove_edge(u, v)
                suite.touch(G, SpectralEstimate(r.lambda_lo, r.lambda_hi, (), 0, True))
                tag = f"k={k} n={n} {orbit}"
                if r.norm_squared != 1:
                    bad.append(f"{tag}: norm^2 {r.norm_squared}")
                if r.rayleigh != r.closed_form:
                    bad.append(f"{tag}: edge sum {r.rayleigh} != closed form {r.closed_form}")
                if r.margin < 0:
                    bad.append(f"{tag}: margin {r.margin}")
                if not r.reaches_threshold:
                    bad.append(f"{tag}: lambda_lo below threshold")
                strict_somewhere |= r.strict
            if not strict_somewhere:
                bad.append(f"k={k} n={n}: no deletion certified strictly above threshold")
    if which == 1:
        boundary = prop1_verify(2, 7)
        if boundary.rayleigh != 4 or boundary.threshold != 4:
            bad.append(f"boundary k=2 n=7 gives Rayleigh {boundary.rayleigh}")
    else:
        boundary = prop2_verify(2, 10)
        if boundary.rayleigh != 6:
            bad.append(f"boundary k=2 n=10 gives Rayleigh {boundary.rayleigh}")
    title = "M_k(n) minus one edge reaches n-k-1" if which == 1 else "N_k(n) minus one edge reaches n-k-2"
    detail = f"{reports} exact reports, norms 1, edge sums equal closed forms, margins >= 0" if not bad else "; ".join(bad[:5])
    return CriterionResult(3 + which, title, not bad, detail, data={"reports": reports, "failures": bad})


def criterion_4(suite: Suite) -> CriterionResult:
    return _propositions(suite, 1)


def criterion_5(suite: Suite) -> CriterionResult:
    return _propositions(suite, 2)


# -- 6: tightness gap --------------------------------------------------------------


def _touch_scan(suite: Suite, scan) -> None:
    for row in scan.rows:
        for o in row.orbits:
            G = _extremal(row.family, row.k, row.n)[0].remove_edge(*o.edge)
            suite.touch(G, SpectralEstimate(o.lambda_lo, o.lambda_hi, (), 0, True))


def criterion_6(suite: Suite) -> CriterionResult:
    """Literal regime boundaries: M (k=2) proposition to n=7, theorem from n=8;
    N (k=2) proposition to n=10, theorem from n=13; both gaps at most 2.

    A second, informational check uses the boundaries implied by the
    construction range and the theorem's n-bound (M: theorem from n=10).
    """
    m_scan = threshold_scan(Family.M, 2, range(5, 15))
    n_scan = threshold_scan(Family.N, 2, range(5, 17))
    _touch_scan(suite, m_scan)
    _touch_scan(suite, n_scan)

    def check(scan, prop_top, theorem_from) -> list[str]:
        bad = []
        for row in scan.rows:
            if row.n <= prop_top and row.regime != "proposition":
                bad.append(f"{scan.family.value} n={row.n} is {row.regime}, expected proposition")
            if row.n >= theorem_from and row.regime != "theorem":
                bad.append(f"{scan.family.value} n={row.n} is {row.regime}, expected theorem")
        if scan.gap is None or scan.gap > 2 or scan.gap < 0:
            bad.append(f"{scan.family.value} gap {scan.gap}")
        return bad

    literal = check(m_scan, 7, 8) + check(n_scan, 10, 13)
    consistent = check(m_scan, 7, math.ceil(cycle_n_bound(2))) + check(n_scan, 10, math.ceil(path_n_bound(2)))
    data = {
        "M": {"crossover": m_scan.crossover, "last_proposition": m_scan.last_proposition, "gap": m_scan.gap,
              "regimes": {r.n: r.regime for r in m_scan.rows}},
        "N": {"crossover": n_scan.crossover, "last_proposition": n_scan.last_proposition, "gap": n_scan.gap,
              "regimes": {r.n: r.regime for r in n_scan.rows}},
        "literal_failures": literal,
        "bound_consistent": not consistent,
    }
    summary = (
        f"M crossover n={m_scan.crossover} (gap {m_scan.gap}), N crossover n={n_scan.crossover} (gap {n_scan.gap}); "
        f"bound-consistent check {'passes' if not consistent else 'fails'}"
    )
    detail = summary if not literal else "; ".join(literal[:3]) + " | " + summary
    return CriterionResult(6, "tightness gap", not literal, detail, data=data)


# -- 7: soundness sweep -------------------------------------------------------------


def random_graphs(seed: int, count: int, n_max: int = 14) -> Iterable[Graph]:
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(3, n_max + 1))
        p = rng.uniform(0.5, 1.0) if rng.random() < 0.7 else rng.uniform(0.1, 0.5)
        upper = np.triu(rng.random((n, n)) < p, 1)
        us, vs = np.nonzero(upper)
        yield Graph(n, zip(us.tolist(), vs.tolist()))


def extremal_chains(n_max: int = 14) -> Iterable[Graph]:
    """Extremal graphs, then one and two edges removed or added.

    The first step uses one edge per pair of classes (an automorphism orbit);
    the second step ranges over every edge or non-edge.
    """
    seen: set[Graph] = set()
    for fam in Family:
        for k in range(0 if fam is Family.N else 1, 4):
            for n in range(max(2 * k + 1, 3), n_max + 1):
                G, parts = _extremal(fam, k, n)
                labelled = [(lab, list(b)) for lab, b in zip("XYZ", parts) if len(b)]
                firsts = []
                for i, (la, a) in enumerate(labelled):
                    for lb, b in labelled[i:]:
                        pair = next(((u, v) for u in a for v in b if u < v), None)
                        if pair is not None:
                            firsts.append(pair)
                for g in [G]:
                    if g not in seen:
                        seen.add(g)
                        yield g
                for u, v in firsts:
                    step = G.remove_edge(u, v) if G.has_edge(u, v) else G.add_edge(u, v)
                    if step not in seen:
                        seen.add(step)
                        yield step
                    for a, b in step.sorted_edges():
                        g = step.remove_edge(a, b)
                        if g not in seen:
                            seen.add(g)
                            yield g
                    for a, b in step.non_edges():
                        g = step.add_edge(a, b)
                        if g not in seen:
                            seen.add(g)
                            yield g


@dataclass
class SweepTally:
    graphs: int = 0
    verdicts: dict = field(default_factory=dict)
    contradictions: list = field(default_factory=list)

    def add(self, v: Verdict) -> None:
        key = f"{v.theorem}:{v.kind.value}"
        self.verdicts[key] = self.verdicts.get(key, 0) + 1


def audit_graph(G: Graph, est: SpectralEstimate, tally: SweepTally) -> None:
    """Run every engine on G and check each definite verdict against the oracle."""
    tally.graphs += 1
    cache: dict[str, bool] = {}

    def has(kind: str) -> bool:
        if kind not in cache:
            cache[kind] = (oracle.ham_cycle(G) if kind == "cycle" else oracle.ham_path(G)) is not None
        return cache[kind]

    jobs: list[Callable[[], Verdict]] = []
    d = G.min_degree
    if d >= 1:
        for k in sorted({1, d}):
            jobs.append(lambda k=k: certify_cycle(G, k, estimate=est))
            jobs.append(lambda k=k: certify_path(G, k, estimate=est))
            jobs.append(lambda k=k: certify_li_ning(G, k, "cycle", estimate=est))
    for k in sorted({0, d}):
        jobs.append(lambda k=k: certify_li_ning(G, k, "path", estimate=est))
    for mode in ("cycle", "path"):
        jobs.append(lambda mode=mode: certify_ore(G, mode))
        jobs.append(lambda mode=mode: certify_chvatal(G, mode))
    for job in jobs:
        try:
            v = job()
        except SoundnessError as exc:
            tally.contradictions.append(f"{G!r}: {exc}")
            continue
        tally.add(v)
        if v.kind is VerdictKind.EXCEPTIONAL:
            mode = "path" if v.exceptional_family in (Family.N, Family.SPLIT) else "cycle"
            if has(mode):
                tally.contradictions.append(f"{G!r}: exceptional {v.exceptional_family.value} but oracle finds a {mode}")
        elif v.kind is VerdictKind.CERTIFIED_CYCLE and not has("cycle"):
            tally.contradictions.append(f"{G!r}: {v.theorem} certified a cycle the oracle rejects")
        elif v.kind is VerdictKind.CERTIFIED_PATH and not has("path"):
            tally.contradictions.append(f"{G!r}: {v.theorem} certified a path the oracle rejects")


def criterion_7(suite: Suite) -> CriterionResult:
    tally = SweepTally()
    for G in random_graphs(suite.seed, suite.sweep_size):
        audit_graph(G, suite.estimate(G), tally)
    random_count = tally.graphs
    for G in extremal_chains(suite.chain_n_max):
        audit_graph(G, suite.estimate(G), tally)
    definite = sum(c for key, c in tally.verdicts.items() if not key.endswith("Inconclusive"))
    ok = not tally.contradictions
    detail = (
        f"{random_count} random + {tally.graphs - random_count} chain graphs, {definite} definite verdicts, "
        f"{len(tally.contradictions)} contradictions"
    )
    data = {"random": random_count, "chains": tally.graphs - random_count, "verdicts": dict(sorted(tally.verdicts.items())),
            "contradictions": tally.contradictions[:20]}
    return CriterionResult(7, "soundness sweep", ok, detail, data=data)


# -- 8: quotient cross-validation ----------------------------------------------------


def criterion_8(suite: Suite) -> CriterionResult:
    worst_lambda = worst_closed = worst_lift = 0.0
    systems = 0
    bad = []
    for fam in Family:
        for k in (1, 2, 3):
            for n in range(2 * k + 2, 31):
                spec = ExtremalSpec(fam, k, n)
                for deleted in (None, "Z"):
                    if deleted and spec.sizes[2] < 3:
                        continue
                    qs = quotient_lambda(spec, deleted)
                    G = qs.graph()
                    est = suite.estimate(G)
                    systems += 1
                    diff = float(abs((qs.lambda_lo + qs.lambda_hi) / 2 - (est.lambda_lo + est.lambda_hi) / 2))
                    cf = closed_form_deviation(qs)
                    lr = lift_residual(qs)
                    worst_lambda, worst_closed, worst_lift = max(worst_lambda, diff), max(worst_closed, cf), max(worst_lift, lr)
                    if diff > AGREEMENT or cf > AGREEMENT or lr > AGREEMENT:
                        bad.append(f"{spec.name} deleted={deleted}: {diff:.2e}/{cf:.2e}/{lr:.2e}")
    detail = (
        f"{systems} quotient systems; max |quotient - power| {worst_lambda:.1e}, "
        f"closed-form deviation {worst_closed:.1e}, eigen-equation residual {worst_lift:.1e}"
    )
    if bad:
        detail = "; ".join(bad[:5])
    return CriterionResult(8, "quotient cross-validation", not bad, detail,
                           data={"systems": systems, "max_lambda_diff": worst_lambda,
                                 "max_closed_form": worst_closed, "max_residual": worst_lift})


# -- 9: edge/degree bound --------------------------------------------------------------


def criterion_9(suite: Suite) -> CriterionResult:
    bad = []
    for G, est in suite.touched.items():
        if hsf_upper_bound(G) < est.lambda_lo:
            bad.append(f"bound below lambda_lo on {G!r}")
    regular = 0
    for n in range(3, 31):
        for G in (build_complete(n), build_cycle(n)):
            est = spectral_radius(G)
            regular += 1
            if abs(float(hsf_upper_bound(G) - est.lambda_lo)) > AGREEMENT:
                bad.append(f"bound not tight on regular {G!r}")
    rng = np.random.default_rng(suite.seed + 9)
    pairs = []
    for _ in range(20):
        n = int(rng.integers(4, 41))
        m = int(rng.integers(0, n * (n - 1) // 2 + 1))
        top = hsf_domain_top(m, n)
        lo = min(Fraction(-n), top - 1)
        grid = [lo + (top - lo) * i / 99 for i in range(100)]
        pairs.append((m, n))
        if not hsf_monotone_check(m, n, grid):
            bad.append(f"f not non-increasing for m={m}, n={n}")
    detail = f"{len(suite.touched)} touched graphs bounded, {regular} regular graphs tight, 20 monotone grids" if not bad else "; ".join(bad[:5])
    return CriterionResult(9, "edge/degree spectral bound", not bad, detail,
                           data={"touched": len(suite.touched), "regular": regular, "pairs": pairs})


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
}


def run_criterion(suite: Suite, number: int) -> CriterionResult:
    start = time.perf_counter()
    result = CRITERIA[number](suite)
    result.seconds = time.perf_counter() - start
    return result


def run_suite(
    seed: int = 0,
    sweep_size: int = 10_000,
    criteria: Iterable[int] | None = None,
    on_result: Callable[[CriterionResult], None] | None = None,
) -> list[CriterionResult]:
    suite = Suite(seed=seed, sweep_size=sweep_size)
    out = []
    for number in criteria or sorted(CRITERIA):
        res = run_criterion(suite, number)
        out.append(res)
        if on_result:
            on_result(res)
    return out
