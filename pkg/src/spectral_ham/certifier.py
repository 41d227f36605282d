"""Spectral Hamiltonicity verdicts.

Each engine checks the order bound and the spectral-radius premise with a
certified interval, looks for the exceptional extremal graphs by exact
structural matching, and otherwise emits a certified verdict with an explicit
cycle or path whenever one can be produced.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from . import closure, oracle
from .graph import (
    ExtremalSpec,
    Family,
    Graph,
    build_extremal,
    cycle_n_bound,
    path_n_bound,
)
from .quotient import quotient_lambda
from .spectral import (
    DEFAULT_TOL,
    SpectralEstimate,
    edge_bound_diagnostic,
    exact_eigenvector,
    rayleigh_quotient,
    shifted_is_positive_definite,
    spectral_radius,
)

CERTIFICATE_ORACLE_MAX_N = 20


class SoundnessError(RuntimeError):
    """A theorem's conclusion was contradicted by the exact oracle."""


class VerdictKind(str, enum.Enum):
    CERTIFIED_CYCLE = "CertifiedHamiltonianCycle"
    CERTIFIED_PATH = "CertifiedHamiltonianPath"
    EXCEPTIONAL = "Exceptional"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ExtremalMatch:
    family: Family
    k: int
    partition: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    @property
    def l(self) -> int:
        return len(self.partition[1])


@dataclass(frozen=True)
class Premises:
    k: int | None
    n: int
    n_bound: Fraction | None = None
    n_bound_held: bool | None = None
    threshold_lo: Fraction | None = None
    threshold_hi: Fraction | None = None
    lambda_lo: Fraction | None = None
    lambda_hi: Fraction | None = None
    comparison: str = "not-evaluated"
    edge_bound: Fraction | None = None
    edge_bound_held: bool | None = None
    failing_premise: str | None = None


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    theorem: str
    premises: Premises
    certificate: tuple[int, ...] | None = None
    certificate_source: str | None = None
    exceptional: ExtremalMatch | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def exceptional_family(self) -> Family | None:
        return self.exceptional.family if self.exceptional else None

    @property
    def certified(self) -> bool:
        return self.kind in (VerdictKind.CERTIFIED_CYCLE, VerdictKind.CERTIFIED_PATH)

    def to_dict(self) -> dict:
        p = self.premises
        threshold = None
        if p.threshold_lo is not None:
            threshold = (
                rational_json(p.threshold_lo)
                if p.threshold_lo == p.threshold_hi
                else {"lo": rational_json(p.threshold_lo), "hi": rational_json(p.threshold_hi)}
            )
        out = {
            "kind": self.kind.value,
            "theorem": self.theorem,
            "k": p.k,
            "n": p.n,
            "lambda_lo": rational_json(p.lambda_lo),
            "lambda_hi": rational_json(p.lambda_hi),
            "threshold": threshold,
        }
        if self.exceptional is not None:
            out["exceptional_family"] = self.exceptional.family.value
            out["partition"] = [list(b) for b in self.exceptional.partition]
        if self.certificate is not None:
            out["certificate"] = list(self.certificate)
            out["certificate_source"] = self.certificate_source
        out["n_bound"] = rational_json(p.n_bound)
        out["n_bound_held"] = p.n_bound_held
        out["comparison"] = p.comparison
        out["failing_premise"] = p.failing_premise
        out["edge_bound"] = rational_json(p.edge_bound)
        out["edge_bound_held"] = p.edge_bound_held
        out["notes"] = list(self.notes)
        return out


def rational_json(x: Fraction | int | None) -> dict | None:
    if x is None:
        return None
    x = Fraction(x)
    return {"exact": f"{x.numerator}/{x.denominator}", "float": float(x)}


# -- structural matching ---------------------------------------------------


def _recover(G: Graph, fam: Family, k: int) -> tuple[list[int], list[int], list[int]] | None:
    n = G.n
    full = [v for v in range(n) if G.degrees[v] == n - 1]
    if fam is Family.SPLIT:
        comps = G.components()
        if len(comps) != 2:
            return None
        comps.sort(key=lambda c: (len(c), c[0]))
        small = [c for c in comps if len(c) == k + 1]
        if not small:
            return None
        X = small[0]
        Z = [v for v in range(n) if v not in X]
        return X, [], Z
    if fam is Family.L:
        if len(full) != 1:
            return None
        Y = full
        rest = [v for v in range(n) if v != Y[0]]
        comps = sorted(G.induced(rest).components(), key=lambda c: (len(c), c[0]))
        comps = [[rest[i] for i in c] for c in comps]
        if len(comps) != 2:
            return None
        X = next((c for c in comps if len(c) == k), None)
        if X is None:
            return None
        Z = [v for v in rest if v not in X]
        return X, Y, Z
    y_size = k
    x_size = k if fam is Family.M else k + 1
    if len(full) != y_size:
        return None
    Y = full
    rest = [v for v in range(n) if v not in Y]
    H = G.induced(rest)
    isolated = [rest[i] for i in range(H.n) if H.degrees[i] == 0]
    if len(isolated) < x_size:
        return None
    X = isolated[:x_size]
    Z = [v for v in rest if v not in X]
    return X, Y, Z


def match_extremal(
    G: Graph, k: int, families: Iterable["Family | str"] = (Family.M, Family.L, Family.N, Family.SPLIT)
) -> ExtremalMatch | None:
    """Recognise G as one of the extremal families with parameter k (exact adjacency check)."""
    for fam in families:
        fam = Family.parse(fam)
        min_k = 0 if fam is Family.N else 1
        if k < min_k or G.n < 2 * k + 1:
            continue
        spec = ExtremalSpec(fam, k, G.n)
        canon, _ = build_extremal(spec)
        if canon.m != G.m or sorted(canon.degrees) != sorted(G.degrees):
            continue
        parts = _recover(G, fam, k)
        if parts is None:
            continue
        X, Y, Z = parts
        if (len(X), len(Y), len(Z)) != spec.sizes:
            continue
        order = X + Y + Z
        perm = [0] * G.n
        for new, old in enumerate(order):
            perm[old] = new
        if G.relabel(perm) == canon:
            return ExtremalMatch(fam, k, (tuple(X), tuple(Y), tuple(Z)))
    return None


# -- spectral comparisons ----------------------------------------------------


def compare_spectral_radius(
    G: Graph,
    est: SpectralEstimate,
    t_lo: Fraction,
    t_hi: Fraction,
    tol: Fraction = DEFAULT_TOL,
) -> tuple[str, SpectralEstimate]:
    """Decide lambda(G) >= t for t in [t_lo, t_hi].

    Returns ``"holds"`` (certified lambda_lo >= t_hi), ``"fails"`` (certified
    lambda < t_lo) or ``"indeterminate"``, together with the estimate used.
    A straddling interval is retried once at a tighter tolerance; for an exact
    rational threshold the tie is then settled by exact linear algebra.
    """

    def decide(e: SpectralEstimate) -> str | None:
        if e.lambda_lo >= t_hi:
            return "holds"
        if e.lambda_hi < t_lo:
            return "fails"
        return None

    outcome = decide(est)
    if outcome:
        return outcome, est
    est = spectral_radius(G, Fraction(tol) / 10**6)
    outcome = decide(est)
    if outcome:
        return outcome, est
    if t_lo == t_hi:
        t = t_lo
        if shifted_is_positive_definite(G, t):
            return "fails", SpectralEstimate(est.lambda_lo, min(est.lambda_hi, t), est.witness, est.iterations, est.converged)
        vec = exact_eigenvector(G, t)
        if vec is not None and rayleigh_quotient(G, vec) == t:
            return "holds", SpectralEstimate(t, max(est.lambda_hi, t), vec, est.iterations, est.converged)
    return "indeterminate", est


# -- certificates --------------------------------------------------------------


def _cycle_certificate(G: Graph) -> tuple[tuple[int, ...] | None, str | None]:
    if G.n <= CERTIFICATE_ORACLE_MAX_N:
        cyc = oracle.ham_cycle(G)
        if cyc is None:
            raise SoundnessError(f"oracle finds no Hamiltonian cycle in certified graph {G!r}")
        return tuple(cyc), "oracle"
    cyc = closure.complete_closure_cycle(G)
    return (tuple(cyc), "closure") if cyc is not None else (None, None)


def _path_certificate(G: Graph) -> tuple[tuple[int, ...] | None, str | None]:
    if G.n <= CERTIFICATE_ORACLE_MAX_N:
        path = oracle.ham_path(G)
        if path is None:
            raise SoundnessError(f"oracle finds no Hamiltonian path in certified graph {G!r}")
        return tuple(path), "oracle"
    path = closure.complete_closure_path(G)
    return (tuple(path), "closure") if path is not None else (None, None)


def _finish(G: Graph, kind: VerdictKind, theorem: str, premises: Premises, notes=()) -> Verdict:
    cycle = kind is VerdictKind.CERTIFIED_CYCLE
    cert, source = _cycle_certificate(G) if cycle else _path_certificate(G)
    notes = list(notes)
    if cert is None:
        notes.append("no explicit certificate: closure is not complete and n exceeds the oracle range")
    else:
        ok = oracle.is_hamiltonian_cycle(G, cert) if cycle else oracle.is_hamiltonian_path(G, cert)
        if not ok:
            raise SoundnessError(f"certificate {cert} failed edge-by-edge validation")
    return Verdict(kind, theorem, premises, cert, source, None, tuple(notes))


def _resolve_k(G: Graph, k: int | None, min_k: int = 1) -> int:
    delta = G.min_degree
    if k is None:
        k = delta
    if k < min_k:
        raise ValueError(f"k must be >= {min_k}, got {k}")
    if delta < k:
        raise ValueError(f"minimum degree {delta} is below k={k}")
    return k


def _spectral_engine(
    G: Graph,
    k: int,
    theorem: str,
    mode: str,
    n_bound: Fraction,
    t_lo: Fraction | None,
    t_hi: Fraction | None,
    families: tuple[Family, ...],
    tol: Fraction,
    estimate: SpectralEstimate | None,
) -> Verdict:
    n = G.n
    est = estimate if estimate is not None else spectral_radius(G, tol)
    n_ok = n >= n_bound
    if t_lo is not None:
        outcome, est = compare_spectral_radius(G, est, t_lo, t_hi, tol)
    else:
        outcome = "not-evaluated"
    edge_bound = edge_bound_diagnostic(n, k, mode) if n > k >= 1 else None
    base = dict(
        k=k,
        n=n,
        n_bound=n_bound,
        n_bound_held=n_ok,
        threshold_lo=t_lo,
        threshold_hi=t_hi,
        lambda_lo=est.lambda_lo,
        lambda_hi=est.lambda_hi,
        comparison=outcome,
        edge_bound=edge_bound,
        edge_bound_held=None if edge_bound is None else G.m >= edge_bound,
    )
    if not n_ok:
        return Verdict(VerdictKind.INCONCLUSIVE, theorem, Premises(**base, failing_premise="n-bound"))
    if outcome != "holds":
        failing = "spectral" if outcome == "fails" else "spectral-indeterminate"
        return Verdict(VerdictKind.INCONCLUSIVE, theorem, Premises(**base, failing_premise=failing))
    premises = Premises(**base)
    match = match_extremal(G, k, families)
    if match is not None:
        return Verdict(VerdictKind.EXCEPTIONAL, theorem, premises, exceptional=match)
    kind = VerdictKind.CERTIFIED_CYCLE if mode == "cycle" else VerdictKind.CERTIFIED_PATH
    return _finish(G, kind, theorem, premises)


def certify_cycle(
    G: Graph, k: int | None = None, tol=DEFAULT_TOL, estimate: SpectralEstimate | None = None
) -> Verdict:
    """lambda(G) >= n-k-1, delta(G) >= k and n >= k^3/2+k+4 give a Hamiltonian cycle unless G is L_k(n) or M_k(n)."""
    k = _resolve_k(G, k)
    t = Fraction(G.n - k - 1)
    return _spectral_engine(
        G, k, "mtc", "cycle", cycle_n_bound(k), t, t, (Family.M, Family.L), Fraction(tol), estimate
    )


def certify_path(
    G: Graph, k: int | None = None, tol=DEFAULT_TOL, estimate: SpectralEstimate | None = None
) -> Verdict:
    """lambda(G) >= n-k-2, delta(G) >= k and n >= k^3/2+k^2/2+k+5 give a Hamiltonian path
    unless G is N_k(n) or K_{n-k-1}+K_{k+1}."""
    k = _resolve_k(G, k)
    t = Fraction(G.n - k - 2)
    return _spectral_engine(
        G, k, "mtp", "path", path_n_bound(k), t, t, (Family.N, Family.SPLIT), Fraction(tol), estimate
    )


@lru_cache(maxsize=512)
def li_ning_threshold(family: Family, k: int, n: int) -> tuple[Fraction, Fraction]:
    """Isolating interval of lambda(M_k(n)) or lambda(N_k(n)) from the quotient system."""
    qs = quotient_lambda(ExtremalSpec(family, k, n))
    return qs.lambda_lo, qs.lambda_hi


def li_ning_n_bound(k: int, mode: str) -> Fraction:
    if mode == "cycle":
        return max(Fraction(6 * k + 5), Fraction(k * k + 6 * k + 4, 2))
    return max(Fraction(6 * k + 10), Fraction(k * k + 7 * k + 8, 2))


def certify_li_ning(
    G: Graph,
    k: int | None = None,
    mode: str = "cycle",
    tol=DEFAULT_TOL,
    estimate: SpectralEstimate | None = None,
) -> Verdict:
    """Threshold lambda(M_k(n)) for cycles or lambda(N_k(n)) for paths, sole exception the threshold graph."""
    if mode not in ("cycle", "path"):
        raise ValueError(f"mode must be 'cycle' or 'path', got {mode!r}")
    k = _resolve_k(G, k, min_k=1 if mode == "cycle" else 0)
    fam = Family.M if mode == "cycle" else Family.N
    n_bound = li_ning_n_bound(k, mode)
    theorem = f"li-ning-{mode}"
    tol = Fraction(tol)
    t_lo = t_hi = None
    if G.n >= 2 * k + 1:
        t_lo, t_hi = li_ning_threshold(fam, k, G.n)
        if G.n >= n_bound:
            match = match_extremal(G, k, (fam,))
            if match is not None:
                est = estimate if estimate is not None else spectral_radius(G, tol)
                premises = Premises(
                    k=k, n=G.n, n_bound=n_bound, n_bound_held=True, threshold_lo=t_lo,
                    threshold_hi=t_hi, lambda_lo=est.lambda_lo, lambda_hi=est.lambda_hi,
                    comparison="equal (threshold graph)",
                )
                return Verdict(VerdictKind.EXCEPTIONAL, theorem, premises, exceptional=match)
    return _spectral_engine(G, k, theorem, mode, n_bound, t_lo, t_hi, (fam,), tol, estimate)


def certify_ore(G: Graph, mode: str = "cycle") -> Verdict:
    """Ore's degree-sum condition (n for cycles, n-1 for paths)."""
    premises = Premises(k=None, n=G.n)
    if mode == "cycle":
        if G.n >= 3 and closure.ore_cycle_check(G):
            return _finish(G, VerdictKind.CERTIFIED_CYCLE, "ore", premises)
    elif G.n >= 2 and closure.ore_path_check(G):
        return _finish(G, VerdictKind.CERTIFIED_PATH, "ore", premises)
    return Verdict(VerdictKind.INCONCLUSIVE, "ore", Premises(k=None, n=G.n, failing_premise="degree-sum"))


def certify_chvatal(G: Graph, mode: str = "cycle") -> Verdict:
    """Chvatal's degree-sequence condition: no witness s means Hamiltonian."""
    premises = Premises(k=None, n=G.n)
    if mode == "cycle":
        w = closure.chvatal_cycle_witness(G) if G.n >= 3 else closure.ChvatalWitness(0, "cycle")
        if w is None:
            return _finish(G, VerdictKind.CERTIFIED_CYCLE, "chvatal", premises)
    else:
        w = closure.chvatal_path_witness(G) if G.n >= 2 else None
        if w is None:
            return _finish(G, VerdictKind.CERTIFIED_PATH, "chvatal", premises)
    return Verdict(
        VerdictKind.INCONCLUSIVE,
        "chvatal",
        Premises(k=None, n=G.n, failing_premise="degree-sequence"),
        notes=(f"witness s={w.s}",),
    )
