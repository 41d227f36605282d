"""Equitable quotient systems of the extremal families.

For an equitable partition the largest eigenvalue of the (non-symmetric)
quotient matrix equals the spectral radius of the graph, and lifting a
quotient eigenvector gives an adjacency eigenvector.  The largest root of the
quotient's characteristic polynomial is isolated in a rational interval with
sympy's exact real-root isolation, independently of :mod:`.spectral`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
import sympy

from .graph import ExtremalSpec, Family, Graph, build_extremal

QUOTIENT_EPS = Fraction(1, 10**13)


@dataclass(frozen=True)
class QuotientSystem:
    spec: ExtremalSpec
    deleted: str | None
    labels: tuple[str, ...]
    blocks: tuple[tuple[int, ...], ...]
    matrix: tuple[tuple[int, ...], ...]
    lambda_lo: Fraction
    lambda_hi: Fraction
    profile: dict[str, float]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def classes(self) -> list[tuple[int, str]]:
        return list(zip(self.sizes, self.labels))

    @property
    def lam(self) -> float:
        return float((self.lambda_lo + self.lambda_hi) / 2)

    def graph(self) -> Graph:
        return quotient_graph(self.spec, self.deleted)[0]

    def lift(self) -> np.ndarray:
        """Profile spread over the vertices of :meth:`graph`."""
        vec = np.zeros(self.spec.n)
        for label, block in zip(self.labels, self.blocks):
            vec[list(block)] = self.profile[label]
        return vec


def quotient_graph(spec: ExtremalSpec, deleted: str | None = None) -> tuple[Graph, list[tuple[str, list[int]]]]:
    """The family graph (optionally minus one Z-edge) with its labelled blocks.

    With ``deleted="Z"`` the first two Z vertices lose their edge and form the
    class ``UV``; empty classes raise ``ValueError``.
    """
    G, (X, Y, Z) = build_extremal(spec)
    if deleted is None:
        blocks = [("X", list(X)), ("Y", list(Y)), ("Z", list(Z))]
        return G, [(lab, b) for lab, b in blocks if b]
    if deleted not in ("Z", "ZZ"):
        raise ValueError(f"only a Z-edge deletion is supported, got {deleted!r}")
    if len(Z) < 3:
        raise ValueError(
            f"{spec.name}: deleting a Z-edge needs |Z| >= 3 so that Z minus the edge is non-empty (|Z|={len(Z)})"
        )
    u, v = Z[0], Z[1]
    G = G.remove_edge(u, v)
    blocks = [("X", list(X)), ("Y", list(Y)), ("Z", list(Z)[2:]), ("UV", [u, v])]
    return G, [(lab, b) for lab, b in blocks if b or lab != "Y"]


def equitable_quotient(G: Graph, blocks: Sequence[Sequence[int]]) -> list[list[int]]:
    """Quotient matrix of ``blocks``; raises if the partition is not equitable."""
    owner = {}
    for i, b in enumerate(blocks):
        for v in b:
            owner[v] = i
    if sorted(owner) != list(range(G.n)):
        raise ValueError("blocks must partition the vertex set")
    k = len(blocks)
    rows = []
    for i, b in enumerate(blocks):
        counts = None
        for v in b:
            c = [0] * k
            for w in G.neighbors(v):
                c[owner[w]] += 1
            if counts is None:
                counts = c
            elif counts != c:
                raise ValueError(f"partition is not equitable at block {i}")
        rows.append(counts)
    return rows


def family_quotient_matrix(spec: ExtremalSpec, deleted: str | None = None) -> list[list[int]]:
    """Quotient matrix written down from the family definitions."""
    k, n = spec.k, spec.n
    fam = spec.family
    if deleted is None:
        if fam is Family.L:
            return [[k - 1, 1, 0], [k, 0, n - k - 1], [0, 1, n - k - 2]]
        if fam is Family.M:
            return [[0, k, 0], [k, k - 1, n - 2 * k], [0, k, n - 2 * k - 1]]
        if fam is Family.N:
            if k == 0:
                return [[0, 0], [0, n - 2]]
            if n == 2 * k + 1:
                return [[0, k], [k + 1, k - 1]]
            return [[0, k, 0], [k + 1, k - 1, n - 2 * k - 1], [0, k, n - 2 * k - 2]]
        return [[k, 0], [0, n - k - 2]]
    if fam is Family.L:
        a = n - k - 3
        return [[k - 1, 1, 0, 0], [k, 0, a, 2], [0, 1, a - 1, 2], [0, 1, a, 0]]
    if fam is Family.M:
        a = n - 2 * k - 2
        return [[0, k, 0, 0], [k, k - 1, a, 2], [0, k, a - 1, 2], [0, k, a, 0]]
    if fam is Family.N:
        if k == 0:
            raise ValueError("N_0 has no Y class")
        a = n - 2 * k - 3
        return [[0, k, 0, 0], [k + 1, k - 1, a, 2], [0, k, a - 1, 2], [0, k, a, 0]]
    a = n - k - 3
    return [[k, 0, 0], [0, a - 1, 2], [0, a, 0]]


def _sym_to_fraction(r) -> Fraction:
    r = sympy.Rational(r)
    return Fraction(int(r.p), int(r.q))


def largest_eigenvalue_interval(B: Sequence[Sequence[int]], eps: Fraction = QUOTIENT_EPS) -> tuple[Fraction, Fraction]:
    """Rational isolating interval of the largest real root of det(x I - B)."""
    x = sympy.Symbol("x")
    poly = sympy.Matrix(B).charpoly(x).as_poly(x)
    intervals = poly.intervals(eps=sympy.Rational(eps.numerator, eps.denominator))
    (a, b), _ = max(intervals, key=lambda iv: iv[0][1])
    return _sym_to_fraction(a), _sym_to_fraction(b)


def _null_vector(B: np.ndarray, lam: float) -> np.ndarray:
    _, _, vh = np.linalg.svd(B - lam * np.eye(B.shape[0]))
    v = vh[-1]
    if v.sum() < 0:
        v = -v
    return v


def quotient_lambda(spec: ExtremalSpec, deleted: str | None = None) -> QuotientSystem:
    """Quotient system of ``spec`` (intact, or with one Z-edge deleted).

    The matrix written from the family formulas is checked against the
    equitable quotient of the actual graph before it is used.
    """
    G, labelled = quotient_graph(spec, deleted)
    labels = tuple(lab for lab, _ in labelled)
    blocks = tuple(tuple(b) for _, b in labelled)
    rows = equitable_quotient(G, blocks)
    expected = family_quotient_matrix(spec, deleted)
    if rows != expected:
        raise AssertionError(f"{spec.name}: quotient {rows} differs from family formula {expected}")
    lo, hi = largest_eigenvalue_interval(rows)
    B = np.asarray(rows, dtype=float)
    vec = _null_vector(B, float((lo + hi) / 2))
    ref = labels.index("Y") if "Y" in labels else int(np.argmax(vec))
    vec = vec / vec[ref]
    profile = {lab: float(val) for lab, val in zip(labels, vec)}
    return QuotientSystem(spec, deleted, labels, blocks, tuple(map(tuple, rows)), lo, hi, profile)


def closed_form_profile(qs: QuotientSystem) -> dict[str, float] | None:
    """Class values predicted by the closed-form solutions of the eigenequations (y = 1).

    Returns ``None`` for SPLIT, whose dominant eigenvector lives on one component.
    """
    fam, k, lam = qs.spec.family, qs.spec.k, qs.lam
    if fam is Family.SPLIT or "Y" not in qs.labels:
        return None
    sizes = dict(zip(qs.labels, qs.sizes))
    if "Z" not in qs.labels:
        return {"X": k / lam, "Y": 1.0}
    if qs.deleted is None:
        zsize = sizes["Z"]
        if fam is Family.L:
            return {"X": 1 / (lam - k + 1), "Y": 1.0, "Z": 1 / (lam - zsize + 1)}
        return {"X": k / lam, "Y": 1.0, "Z": k / (lam - zsize + 1)}
    if fam is Family.M:
        x = k / lam
        z = 1 - k * k / (lam * (lam + 1))
    elif fam is Family.N:
        x = k / lam
        z = 1 - k * (k + 1) / (lam * (lam + 1))
    else:
        x = 1 / (lam - k + 1)
        z = 1 - k / ((lam - k + 1) * (lam + 1))
    t = (lam + 1) / (lam + 2) * z
    return {"X": x, "Y": 1.0, "Z": z, "UV": t}


def closed_form_deviation(qs: QuotientSystem) -> float:
    expected = closed_form_profile(qs)
    if expected is None:
        return 0.0
    return max(abs(qs.profile[lab] - val) for lab, val in expected.items())


def lift_residual(qs: QuotientSystem) -> float:
    """max |A p - lambda p| for the lifted profile p."""
    A = qs.graph().adjacency_matrix()
    p = qs.lift()
    return float(np.max(np.abs(A @ p - qs.lam * p)))
