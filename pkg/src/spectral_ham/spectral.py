"""Spectral radius with certified rational bounds, plus degree/edge spectral bounds.

The lower bound is always the exact Rayleigh quotient of an explicit rational
vector (a rounded power-iteration iterate).  The upper bound ``c`` is proved by
showing that ``c*I - A`` is positive definite, using fraction-free (Bareiss)
elimination on an integer matrix: all leading principal minors positive.
Nothing in either bound relies on floating-point trust.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import Graph

Rational = Fraction | int
DEFAULT_TOL = Fraction(1, 10**12)
MAX_ITER = 10**6
_WITNESS_BITS = 53


@dataclass(frozen=True)
class SpectralEstimate:
    """Certified interval ``[lambda_lo, lambda_hi]`` containing the spectral radius.

    ``witness`` is a nonnegative rational vector whose Rayleigh quotient is
    exactly ``lambda_lo``.  It is positive on the component that attains the
    spectral radius and zero elsewhere.
    """

    lambda_lo: Fraction
    lambda_hi: Fraction
    witness: tuple[Fraction, ...]
    iterations: int
    converged: bool = True

    @property
    def width(self) -> Fraction:
        return self.lambda_hi - self.lambda_lo

    @property
    def midpoint(self) -> float:
        return float((self.lambda_lo + self.lambda_hi) / 2)

    def contains(self, value: Rational) -> bool:
        return self.lambda_lo <= value <= self.lambda_hi


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, (float, np.floating)):
        return Fraction(float(x))
    return Fraction(x)


def rayleigh_quotient(G: Graph, v: Sequence) -> Fraction:
    """Exact <A v, v> / <v, v>."""
    if len(v) != G.n:
        raise ValueError(f"vector has length {len(v)}, graph has {G.n} vertices")
    vec = [_as_fraction(x) for x in v]
    den = sum(x * x for x in vec)
    if den == 0:
        raise ValueError("zero vector")
    num = 2 * sum(vec[a] * vec[b] for a, b in G.edges)
    return Fraction(num) / den


def is_positive_definite(M: list[list[int]]) -> bool:
    """Sylvester's criterion via Bareiss elimination on a symmetric integer matrix."""
    n = len(M)
    M = [list(row) for row in M]
    prev = 1
    for k in range(n):
        piv = M[k][k]
        if piv <= 0:
            return False
        row_k = M[k]
        for i in range(k + 1, n):
            row_i = M[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * piv - mik * row_k[j]) // prev
        prev = piv
    return True


def shifted_is_positive_definite(G: Graph, c: Rational) -> bool:
    """True iff ``c*I - A(G)`` is positive definite, i.e. iff lambda(G) < c."""
    c = _as_fraction(c)
    p, q = c.numerator, c.denominator
    n = G.n
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        M[i][i] = p
    for a, b in G.edges:
        M[a][b] = M[b][a] = -q
    return is_positive_definite(M)


def spectral_radius_at_least(G: Graph, t: Rational) -> bool:
    """Exact decision of lambda(G) >= t."""
    return not shifted_is_positive_definite(G, t)


def _power_iterate(A: np.ndarray, max_iter: int) -> tuple[np.ndarray, int, bool]:
    # iterate on A + I: the shift removes the +-lambda tie of bipartite graphs
    n = A.shape[0]
    B = A + np.eye(n)
    x = A.sum(axis=1)
    x = x / np.linalg.norm(x)
    for it in range(1, max_iter + 1):
        y = B @ x
        x = y / np.linalg.norm(y)
        if it % 8 == 0 or it == max_iter:
            Ax = A @ x
            rho = float(x @ Ax)
            if np.linalg.norm(Ax - rho * x) <= 1e-13 * max(1.0, rho):
                return x, it, True
    return x, max_iter, False


def _dyadic_ceil(x: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(-((-x.numerator * scale) // x.denominator), scale)


def _component_estimate(G: Graph, tol: Fraction, max_iter: int) -> SpectralEstimate:
    if G.m == 0:
        return SpectralEstimate(Fraction(0), Fraction(0), (Fraction(1),) + (Fraction(0),) * (G.n - 1), 0)
    x, iterations, converged = _power_iterate(G.adjacency_matrix(), max_iter)
    x = np.abs(x) / np.max(np.abs(x))
    ints = [max(1, int(round(float(xi) * (1 << _WITNESS_BITS)))) for xi in x]
    num = 2 * sum(ints[a] * ints[b] for a, b in G.edges)
    den = sum(a * a for a in ints)
    lo = Fraction(num, den)

    bits = 0
    while Fraction(1, 1 << bits) > tol / 4:
        bits += 1
    c = _dyadic_ceil(lo + tol / 2, bits)
    if shifted_is_positive_definite(G, c):
        hi = c
    else:
        # lambda >= c is now certified; bisect the upper bound between c and max degree + 1
        converged = False
        low_b, hi = c, Fraction(G.max_degree + 1)
        for _ in range(200):
            if hi - low_b <= tol:
                break
            mid = _dyadic_ceil((low_b + hi) / 2, bits + 8)
            if shifted_is_positive_definite(G, mid):
                hi = mid
            else:
                low_b = mid
    witness = tuple(Fraction(a) for a in ints)
    return SpectralEstimate(lo, hi, witness, iterations, converged and hi - lo <= tol)


def spectral_radius(G: Graph, tol: Rational = DEFAULT_TOL, max_iter: int = MAX_ITER) -> SpectralEstimate:
    """Certified enclosure of the largest adjacency eigenvalue of ``G``.

    Disconnected graphs are handled per component; the result is the maximum.
    """
    tol = _as_fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if G.n == 0:
        raise ValueError("empty graph has no spectral radius")
    best = None
    best_comp = None
    hi = Fraction(0)
    iterations = 0
    converged = True
    for comp in G.components():
        est = _component_estimate(G.induced(comp), tol, max_iter)
        iterations += est.iterations
        converged = converged and est.converged
        hi = max(hi, est.lambda_hi)
        if best is None or est.lambda_lo > best.lambda_lo:
            best, best_comp = est, comp
    witness = [Fraction(0)] * G.n
    for v, w in zip(best_comp, best.witness):
        witness[v] = w
    return SpectralEstimate(best.lambda_lo, hi, tuple(witness), iterations, converged)


# -- degree / edge-count bounds ------------------------------------------


def _sqrt_upper(x: Fraction, bits: int = 64) -> Fraction:
    """Smallest dyadic with ``bits`` fractional bits that is >= sqrt(x); exact for rational squares."""
    if x < 0:
        raise ValueError(f"negative radicand {x}")
    rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    scale = 1 << bits
    # ceil(sqrt(x) * scale) = ceil(sqrt(num * scale^2 / den))
    target = x.numerator * scale * scale
    r = math.isqrt(target // x.denominator)
    while Fraction(r * r, scale * scale) < x:
        r += 1
    return Fraction(r, scale)


def hsf_upper_bound(G: Graph) -> Fraction:
    """(delta-1)/2 + sqrt(2m - n*delta + (delta+1)^2/4), rounded upward to a rational."""
    n, m, d = G.n, G.m, G.min_degree
    radicand = Fraction(2 * m - n * d) + Fraction((d + 1) ** 2, 4)
    assert radicand >= 0, "2m >= n*delta for every graph"
    return Fraction(d - 1, 2) + _sqrt_upper(radicand)


def hsf_radicand(x: Rational, m: int, n: int) -> Fraction:
    x = _as_fraction(x)
    return 2 * m - n * x + (x + 1) ** 2 / 4


def hsf_f(x: Rational, m: int, n: int) -> Fraction:
    """f(x) = (x-1)/2 + sqrt(2m - n x + (x+1)^2/4), upward-rounded unless the root is rational."""
    if 2 * m > n * (n - 1):
        raise ValueError(f"need 2m <= n(n-1), got m={m}, n={n}")
    r = hsf_radicand(x, m, n)
    if r < 0:
        raise ValueError(f"negative radicand {r} at x={x}")
    return (_as_fraction(x) - 1) / 2 + _sqrt_upper(r)


def _surd_ge(a: Fraction, ra: Fraction, b: Fraction, rb: Fraction) -> bool:
    """Exact test of a + sqrt(ra) >= b + sqrt(rb) for ra, rb >= 0."""
    d = b - a  # need sqrt(ra) - sqrt(rb) >= d
    if d <= 0:
        # sqrt(ra) + |d| >= sqrt(rb)  <=>  ra + d^2 + 2|d| sqrt(ra) >= rb
        lhs = rb - ra - d * d
        if lhs <= 0:
            return True
        e = -d
        return e > 0 and 4 * e * e * ra >= lhs * lhs
    # sqrt(ra) >= d + sqrt(rb)  <=>  ra - d^2 - rb >= 2 d sqrt(rb)
    lhs = ra - d * d - rb
    if lhs < 0:
        return False
    return lhs * lhs >= 4 * d * d * rb


def hsf_ge(x1: Rational, x2: Rational, m: int, n: int) -> bool:
    """Exact comparison f(x1) >= f(x2)."""
    x1, x2 = _as_fraction(x1), _as_fraction(x2)
    r1, r2 = hsf_radicand(x1, m, n), hsf_radicand(x2, m, n)
    if r1 < 0 or r2 < 0:
        raise ValueError("negative radicand on grid")
    return _surd_ge((x1 - 1) / 2, r1, (x2 - 1) / 2, r2)


def hsf_monotone_check(m: int, n: int, grid: Sequence[Rational]) -> bool:
    """True iff f is non-increasing along the ascending ``grid`` (all points <= n-1).

    Grid points where the radicand is negative lie outside the real domain of f
    and are skipped; below n-1 that domain is the interval (-inf, x*].
    """
    if 2 * m > n * (n - 1):
        raise ValueError(f"need 2m <= n(n-1), got m={m}, n={n}")
    pts = [_as_fraction(x) for x in grid]
    if any(b < a for a, b in zip(pts, pts[1:])):
        raise ValueError("grid must be ascending")
    if pts and pts[-1] > n - 1:
        raise ValueError("grid exceeds n-1")
    pts = [x for x in pts if hsf_radicand(x, m, n) >= 0]
    return all(hsf_ge(a, b, m, n) for a, b in zip(pts, pts[1:]))


def hsf_domain_top(m: int, n: int) -> Fraction:
    """A rational x* <= n-1 such that the radicand is non-negative on (-inf, x*]."""
    top = Fraction(n - 1)
    if hsf_radicand(top, m, n) >= 0:
        return top
    # smaller root of x^2 - (4n-2) x + (1 + 8m)
    root = (2 * n - 1) - math.sqrt(max(0.0, (2 * n - 1) ** 2 - 1 - 8 * m))
    x = Fraction(root).limit_denominator(10**6)
    while hsf_radicand(x, m, n) < 0:
        x -= Fraction(1, 10**6)
    return x


def edge_bound_diagnostic(n: int, k: int, mode: str = "cycle") -> Fraction:
    """Edge-count threshold implied by the spectral premise and the degree bound.

    cycle: (n^2 - 2kn + 2k^2 + k - n)/2;  path: (n^2 - 2kn + 2k^2 + 4k - 3n + 2)/2.
    """
    if not n > k >= 1:
        raise ValueError(f"need n > k >= 1, got n={n}, k={k}")
    if mode == "cycle":
        return Fraction(n * n - 2 * k * n + 2 * k * k + k - n, 2)
    if mode == "path":
        return Fraction(n * n - 2 * k * n + 2 * k * k + 4 * k - 3 * n + 2, 2)
    raise ValueError(f"mode must be 'cycle' or 'path', got {mode!r}")


def exact_eigenvector(G: Graph, t: Rational) -> tuple[Fraction, ...] | None:
    """A rational vector in the kernel of ``A - t I``, or ``None`` if t is not an eigenvalue."""
    t = _as_fraction(t)
    n = G.n
    M = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        M[i][i] = -t
    for a, b in G.edges:
        M[a][b] = M[b][a] = Fraction(1)
    pivots = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if M[r][col] != 0), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        inv = 1 / M[row][col]
        M[row] = [x * inv for x in M[row]]
        for r in range(n):
            if r != row and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return None
    # one basis vector of the kernel; pick the free column giving the largest positive mass
    best = None
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -M[r][fc]
        if sum(vec) < 0:
            vec = [-x for x in vec]
        if best is None or sum(vec) > sum(best):
            best = vec
    return tuple(best)
