"""Near-extremal constructions and the threshold scanner.

Removing one edge inside Y u Z of M_k(n) (or N_k(n)) keeps the minimum degree
at k.  For small n such a graph still reaches the spectral threshold, which an
explicit test vector shows; for large n it does not.  The vectors live in
Q(sqrt r) with a single radicand r, so they are stored as rational
coefficients over sqrt(r) and every norm and Rayleigh value is an exact
rational.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .certifier import compare_spectral_radius, rational_json
from .graph import (
    ExtremalSpec,
    Family,
    Graph,
    build_extremal,
    cycle_n_bound,
    path_n_bound,
)
from .spectral import DEFAULT_TOL, spectral_radius


@dataclass(frozen=True)
class SurdVector:
    """Entries ``coeffs[i] / sqrt(radicand)``."""

    coeffs: tuple[Fraction, ...]
    radicand: Fraction

    def __len__(self) -> int:
        return len(self.coeffs)

    def norm_squared(self) -> Fraction:
        return sum((c * c for c in self.coeffs), Fraction(0)) / self.radicand

    def dot(self, other: "SurdVector") -> Fraction:
        if self.radicand != other.radicand:
            raise ValueError("vectors live over different radicands")
        return sum((a * b for a, b in zip(self.coeffs, other.coeffs)), Fraction(0)) / self.radicand

    def quadratic_form(self, G: Graph) -> Fraction:
        """<A x, x> = 2 * sum over edges of x_u x_v."""
        c = self.coeffs
        return 2 * sum((c[u] * c[v] for u, v in G.edges), Fraction(0)) / self.radicand

    def to_floats(self) -> list[float]:
        s = math.sqrt(self.radicand)
        return [float(c) / s for c in self.coeffs]


@dataclass(frozen=True)
class TightnessReport:
    family: Family
    k: int
    n: int
    construction: str
    norm_squared: Fraction
    rayleigh: Fraction
    closed_form: Fraction
    threshold: Fraction
    lambda_lo: Fraction
    lambda_hi: Fraction
    in_range: bool
    comparison: str  # holds / fails / indeterminate for lambda >= threshold

    @property
    def margin(self) -> Fraction:
        return self.rayleigh - self.threshold

    @property
    def reaches_threshold(self) -> bool:
        """Certified lambda >= threshold (ties settled exactly)."""
        return self.comparison == "holds"

    @property
    def strict(self) -> bool:
        """Certified lambda_lo > threshold."""
        return self.lambda_lo > self.threshold

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "k": self.k,
            "n": self.n,
            "construction": self.construction,
            "norm_squared": rational_json(self.norm_squared),
            "rayleigh": rational_json(self.rayleigh),
            "closed_form": rational_json(self.closed_form),
            "threshold": rational_json(self.threshold),
            "margin": rational_json(self.margin),
            "lambda_lo": rational_json(self.lambda_lo),
            "lambda_hi": rational_json(self.lambda_hi),
            "in_range": self.in_range,
            "comparison": self.comparison,
            "strict": self.strict,
        }


# -- constructions -------------------------------------------------------------

_PROP_FAMILY = {1: Family.M, 2: Family.N}


def _prop_range(which: int, k: int) -> tuple[int, Fraction]:
    top = Fraction(k**3, 2) + k + 1 if which == 1 else Fraction(k**3 + k * k, 2) + k + 2
    return 2 * k + 1, top


def _deleted_graph(family: Family, k: int, n: int, u: int, v: int) -> Graph:
    spec = ExtremalSpec(family, k, n)
    G, (X, _, _) = build_extremal(spec)
    if u == v:
        raise ValueError("u and v must be distinct")
    if u in X or v in X:
        raise ValueError(f"deleting an edge at an X vertex of {spec.name} drops the minimum degree below k")
    if not G.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge of {spec.name}")
    H = G.remove_edge(u, v)
    if H.min_degree < k:
        raise ValueError(f"{spec.name} minus ({u}, {v}) has minimum degree {H.min_degree} < {k}")
    return H


def _default_pair(family: Family, k: int, n: int) -> tuple[int, int]:
    # Z-Z first: with a Y-Y deletion at k=2 on the range boundary the test
    # vector is an exact eigenvector and lambda only equals the threshold.
    for orbit, (u, v) in reversed(deletion_orbits(family, k, n)):
        return u, v
    raise ValueError(f"{family.value}_{k}({n}) has no minimum-degree-preserving edge deletion")


def prop1_graph(k: int, n: int, u: int | None = None, v: int | None = None) -> Graph:
    """M_k(n) minus an edge {u, v} inside Y u Z."""
    if k < 2 or n < 2 * k + 1:
        raise ValueError(f"need k >= 2 and n >= 2k+1, got k={k}, n={n}")
    if u is None or v is None:
        u, v = _default_pair(Family.M, k, n)
    return _deleted_graph(Family.M, k, n, u, v)


def prop2_graph(k: int, n: int, u: int | None = None, v: int | None = None) -> Graph:
    """N_k(n) minus an edge {u, v} inside Y u Z."""
    if k < 2 or n < 2 * k + 1:
        raise ValueError(f"need k >= 2 and n >= 2k+1, got k={k}, n={n}")
    if u is None or v is None:
        u, v = _default_pair(Family.N, k, n)
    return _deleted_graph(Family.N, k, n, u, v)


def _vector(x_count: int, ratio: Fraction, n: int, radicand: Fraction) -> SurdVector:
    coeffs = tuple([ratio] * x_count + [Fraction(1)] * (n - x_count))
    return SurdVector(coeffs, radicand)


def prop1_vector(k: int, n: int) -> SurdVector:
    """x = 2/(k^2 sqrt r) on X, y = 1/sqrt r on Y u Z, with r = n - k + 4/k^3."""
    return _vector(k, Fraction(2, k * k), n, n - k + Fraction(4, k**3))


def prop2_vector(k: int, n: int) -> SurdVector:
    """x = 2/(k(k+1) sqrt r) on X (k+1 vertices), y = 1/sqrt r elsewhere, r = n-k-1 + 4/(k^2(k+1))."""
    return _vector(k + 1, Fraction(2, k * (k + 1)), n, n - k - 1 + Fraction(4, k * k * (k + 1)))


def prop1_closed_form(k: int, n: int) -> Fraction:
    r = n - k + Fraction(4, k**3)
    return n - k - 1 - Fraction(4, k**3) / r * (n - k - 1 - Fraction(k**3, 2))


def prop2_closed_form(k: int, n: int) -> Fraction:
    c = k * k * (k + 1)
    r = n - k - 1 + Fraction(4, c)
    return n - k - 2 - Fraction(4, c) / r * (n - k - 2 - Fraction(c, 2))


def _verify(which: int, k: int, n: int, u, v, tol) -> TightnessReport:
    family = _PROP_FAMILY[which]
    if u is None or v is None:
        u, v = _default_pair(family, k, n)
    G = prop1_graph(k, n, u, v) if which == 1 else prop2_graph(k, n, u, v)
    vec = prop1_vector(k, n) if which == 1 else prop2_vector(k, n)
    closed = prop1_closed_form(k, n) if which == 1 else prop2_closed_form(k, n)
    threshold = Fraction(n - k - 1 if which == 1 else n - k - 2)
    lo, top = _prop_range(which, k)
    outcome, est = compare_spectral_radius(G, spectral_radius(G, tol), threshold, threshold, tol)
    X, Y, Z = ExtremalSpec(family, k, n).partition()
    cls = "".join(sorted("Y" if w in Y else "Z" for w in (u, v)))
    return TightnessReport(
        family=family,
        k=k,
        n=n,
        construction=f"{family.value}_{k}({n}) - {cls}",
        norm_squared=vec.norm_squared(),
        rayleigh=vec.quadratic_form(G),
        closed_form=closed,
        threshold=threshold,
        lambda_lo=est.lambda_lo,
        lambda_hi=est.lambda_hi,
        in_range=lo <= n <= top,
        comparison=outcome,
    )


def prop1_verify(k: int, n: int, u: int | None = None, v: int | None = None, tol=DEFAULT_TOL) -> TightnessReport:
    """Exact norm, Rayleigh value (edge sum) and closed form for M_k(n) minus a Y u Z edge."""
    return _verify(1, k, n, u, v, tol)


def prop2_verify(k: int, n: int, u: int | None = None, v: int | None = None, tol=DEFAULT_TOL) -> TightnessReport:
    """As :func:`prop1_verify` for N_k(n), threshold n-k-2."""
    return _verify(2, k, n, u, v, tol)


# -- deletion orbits and the scan --------------------------------------------------


def deletion_orbits(family: "Family | str", k: int, n: int) -> list[tuple[str, tuple[int, int]]]:
    """One representative edge per automorphism orbit of deletions keeping delta >= k.

    Orbits are named by the classes of the endpoints (YY, YZ, ZZ); deletions
    touching X always lower an X-degree below k and are never listed.
    """
    family = Family.parse(family)
    spec = ExtremalSpec(family, k, n)
    G, (X, Y, Z) = build_extremal(spec)
    cands = []
    if len(Y) >= 2:
        cands.append(("YY", (Y[0], Y[1])))
    if len(Y) >= 1 and len(Z) >= 1:
        cands.append(("YZ", (Y[0], Z[0])))
    if len(Z) >= 2:
        cands.append(("ZZ", (Z[0], Z[1])))
    out = []
    for name, (u, v) in cands:
        if G.has_edge(u, v) and G.remove_edge(u, v).min_degree >= k:
            out.append((name, (u, v)))
    return out


def scan_threshold(family: Family, k: int, n: int) -> Fraction:
    return Fraction(n - k - 1) if family in (Family.M, Family.L) else Fraction(n - k - 2)


def theorem_bound(family: Family, k: int) -> Fraction:
    return cycle_n_bound(k) if family in (Family.M, Family.L) else path_n_bound(k)


@dataclass(frozen=True)
class OrbitResult:
    orbit: str
    edge: tuple[int, int]
    lambda_lo: Fraction
    lambda_hi: Fraction
    outcome: str  # holds / fails / indeterminate, relative to lambda >= threshold


@dataclass(frozen=True)
class ScanRow:
    family: Family
    k: int
    n: int
    threshold: Fraction
    orbits: tuple[OrbitResult, ...]

    @property
    def regime(self) -> str:
        if not self.orbits:
            return "empty"
        outcomes = [o.outcome for o in self.orbits]
        if "holds" in outcomes:
            return "proposition"
        if all(o == "fails" for o in outcomes):
            return "theorem"
        return "unresolved"

    @property
    def flagged(self) -> bool:
        return self.regime == "unresolved"

    @property
    def max_lambda_lo(self) -> Fraction | None:
        return max((o.lambda_lo for o in self.orbits), default=None)

    @property
    def max_lambda_hi(self) -> Fraction | None:
        return max((o.lambda_hi for o in self.orbits), default=None)

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "k": self.k,
            "n": self.n,
            "threshold": rational_json(self.threshold),
            "max_lambda_lo": rational_json(self.max_lambda_lo),
            "max_lambda_hi": rational_json(self.max_lambda_hi),
            "regime": self.regime,
            "orbits": [
                {
                    "orbit": o.orbit,
                    "edge": list(o.edge),
                    "lambda_lo": rational_json(o.lambda_lo),
                    "lambda_hi": rational_json(o.lambda_hi),
                    "outcome": o.outcome,
                }
                for o in self.orbits
            ],
        }


@dataclass(frozen=True)
class ScanResult:
    family: Family
    k: int
    rows: tuple[ScanRow, ...]

    @property
    def theorem_bound(self) -> Fraction:
        return theorem_bound(self.family, self.k)

    @property
    def last_proposition(self) -> int | None:
        return max((r.n for r in self.rows if r.regime == "proposition"), default=None)

    @property
    def crossover(self) -> int | None:
        """Least scanned n from which every non-empty row is in the theorem regime."""
        best = None
        for row in sorted(self.rows, key=lambda r: r.n, reverse=True):
            if row.regime == "empty":
                continue
            if row.regime != "theorem":
                break
            best = row.n
        return best

    @property
    def gap(self) -> int | None:
        """Distance from the empirical crossover to the theorem's n-bound."""
        if self.crossover is None:
            return None
        return math.ceil(self.theorem_bound) - self.crossover

    def regime_of(self, n: int) -> str | None:
        for row in self.rows:
            if row.n == n:
                return row.regime
        return None

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "k": self.k,
            "theorem_bound": rational_json(self.theorem_bound),
            "last_proposition": self.last_proposition,
            "crossover": self.crossover,
            "gap": self.gap,
            "rows": [r.to_dict() for r in self.rows],
        }


def _scan_row(args) -> ScanRow:
    family, k, n, tol = args
    t = scan_threshold(family, k, n)
    results = []
    for name, (u, v) in deletion_orbits(family, k, n):
        H = build_extremal(ExtremalSpec(family, k, n))[0].remove_edge(u, v)
        outcome, est = compare_spectral_radius(H, spectral_radius(H, tol), t, t, tol)
        results.append(OrbitResult(name, (u, v), est.lambda_lo, est.lambda_hi, outcome))
    return ScanRow(family, k, n, t, tuple(results))


def threshold_scan(
    family: "Family | str",
    k: int,
    n_range: Iterable[int],
    tol=DEFAULT_TOL,
    workers: int = 1,
) -> ScanResult:
    """Classify each n by the certified spectral radii of the one-edge deletions.

    ``proposition``: some deletion has lambda >= threshold.  ``theorem``: every
    deletion is certified below it.  ``unresolved``: an interval straddles the
    threshold even after tightening.  ``empty``: no admissible deletion.
    """
    family = Family.parse(family)
    ns = [n for n in n_range if n >= 2 * k + 1]
    jobs = [(family, k, n, Fraction(tol)) for n in ns]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_scan_row, jobs))
    else:
        rows = [_scan_row(j) for j in jobs]
    return ScanResult(family, k, tuple(rows))


CSV_COLUMNS = ("family", "k", "n", "threshold", "max_lambda_lo", "max_lambda_hi", "regime", "orbits")


def _fmt(x: Fraction | None) -> str:
    return "" if x is None else f"{float(x):.15g}"


def scan_to_csv(result: ScanResult) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in result.rows:
        orbits = ";".join(f"{o.orbit}:{o.outcome}" for o in r.orbits)
        w.writerow([r.family.value, r.k, r.n, _fmt(r.threshold), _fmt(r.max_lambda_lo), _fmt(r.max_lambda_hi), r.regime, orbits])
    return buf.getvalue()


def reports_to_csv(reports: Sequence[TightnessReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["family", "k", "n", "construction", "rayleigh", "threshold", "margin", "lambda_lo", "strict"])
    for r in reports:
        w.writerow([r.family.value, r.k, r.n, r.construction, str(r.rayleigh), str(r.threshold), str(r.margin), _fmt(r.lambda_lo), r.strict])
    return buf.getvalue()


def to_json(obj) -> str:
    payload = obj.to_dict() if hasattr(obj, "to_dict") else [o.to_dict() for o in obj]
    return json.dumps(payload, indent=2)
