"""Simple undirected graphs and the extremal families L_k(n), M_k(n), N_k(n).

Vertices are ``0..n-1``.  A :class:`Graph` is immutable; every operation that
changes the edge set returns a new graph.  Adjacency is kept both as an edge
set and as one integer bitset per vertex, which is what the exact Hamiltonicity
oracle and the closure loops work on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_edges", "_adj", "_degrees", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        norm = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            edge = _norm_edge(u, v)
            if edge in norm:
                raise ValueError(f"duplicate edge {edge}")
            norm.add(edge)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._edges = frozenset(norm)
        self._adj = tuple(adj)
        self._degrees = tuple(a.bit_count() for a in adj)
        self._hash = None
        assert sum(self._degrees) == 2 * len(self._edges)

    @classmethod
    def _from_bitsets(cls, adj: Sequence[int]) -> "Graph":
        n = len(adj)
        edges = []
        for u in range(n):
            row = adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    edges.append((u, v))
                row >>= 1
                v += 1
        return cls(n, edges)

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    @property
    def adjacency_bits(self) -> tuple[int, ...]:
        return self._adj

    @property
    def min_degree(self) -> int:
        return min(self._degrees) if self._n else 0

    @property
    def max_degree(self) -> int:
        return max(self._degrees) if self._n else 0

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        row = self._adj[v]
        return [u for u in range(self._n) if row >> u & 1]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    def non_edges(self) -> list[Edge]:
        return [
            (u, v)
            for u in range(self._n)
            for v in range(u + 1, self._n)
            if not self._adj[u] >> v & 1
        ]

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        A = np.zeros((self._n, self._n), dtype=dtype)
        for u, v in self._edges:
            A[u, v] = A[v, u] = 1
        return A

    # -- derived graphs --------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) already present")
        return Graph(self._n, list(self._edges) + [(u, v)])

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = _norm_edge(u, v)
        if e not in self._edges:
            raise ValueError(f"edge ({u}, {v}) not present")
        return Graph(self._n, self._edges - {e})

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph(self._n, [(perm[u], perm[v]) for u, v in self._edges])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertex ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            [(index[u], index[v]) for u, v in self._edges if u in index and v in index],
        )

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self._n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= self._adj[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            comps.append([v for v in range(self._n) if comp >> v & 1])
        return comps

    def is_connected(self) -> bool:
        return self._n <= 1 or len(self.components()) == 1

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


# -- builders ------------------------------------------------------------


def build_complete(s: int) -> Graph:
    if s < 1:
        raise ValueError(f"complete graph needs s >= 1, got {s}")
    return Graph(s, [(u, v) for u in range(s) for v in range(u + 1, s)])


def build_edgeless(s: int) -> Graph:
    if s < 1:
        raise ValueError(f"edgeless graph needs s >= 1, got {s}")
    return Graph(s)


def build_cycle(s: int) -> Graph:
    if s < 3:
        raise ValueError(f"cycle needs s >= 3, got {s}")
    return Graph(s, [(i, (i + 1) % s) for i in range(s)])


def build_path(s: int) -> Graph:
    if s < 1:
        raise ValueError(f"path needs s >= 1, got {s}")
    return Graph(s, [(i, i + 1) for i in range(s - 1)])


def build_star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre labelled ``leaves`` (last)."""
    return Graph(leaves + 1, [(i, leaves) for i in range(leaves)])


def build_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shift = G.n
    return Graph(G.n + H.n, list(G.edges) + [(u + shift, v + shift) for u, v in H.edges])


def join(G: Graph, H: Graph) -> Graph:
    shift = G.n
    cross = [(u, shift + v) for u in range(G.n) for v in range(H.n)]
    return Graph(
        G.n + H.n,
        list(G.edges) + [(u + shift, v + shift) for u, v in H.edges] + cross,
    )


def degrees_ascending(G: Graph) -> np.ndarray:
    return np.sort(np.asarray(G.degrees, dtype=np.int64))


# -- extremal families ---------------------------------------------------


class Family(str, enum.Enum):
    L = "L"
    M = "M"
    N = "N"
    SPLIT = "SPLIT"

    @classmethod
    def parse(cls, name: "str | Family") -> "Family":
        if isinstance(name, Family):
            return name
        key = name.strip().upper()
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown family {name!r}; expected one of L, M, N, SPLIT") from None


@dataclass(frozen=True)
class ExtremalSpec:
    """One member of an extremal family.

    ``SPLIT`` stands for the disconnected graph K_{n-k-1} + K_{k+1}.  ``N`` also
    accepts ``k = 0``, where N_0(n) = K_{n-1} + K_1.
    """

    family: Family
    k: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family.parse(self.family))
        min_k = 0 if self.family is Family.N else 1
        if self.k < min_k:
            raise ValueError(f"{self.family.value}_k needs k >= {min_k}, got k={self.k}")
        if self.n < 2 * self.k + 1:
            raise ValueError(
                f"{self.family.value}_{self.k}(n) needs n >= 2k+1 = {2 * self.k + 1}, got n={self.n}"
            )

    @property
    def sizes(self) -> tuple[int, int, int]:
        """Sizes of the canonical partition (X, Y, Z)."""
        k, n = self.k, self.n
        return {
            Family.L: (k, 1, n - k - 1),
            Family.M: (k, k, n - 2 * k),
            Family.N: (k + 1, k, n - 2 * k - 1),
            Family.SPLIT: (k + 1, 0, n - k - 1),
        }[self.family]

    def partition(self) -> tuple[range, range, range]:
        x, y, _ = self.sizes
        return range(0, x), range(x, x + y), range(x + y, self.n)

    @property
    def name(self) -> str:
        if self.family is Family.SPLIT:
            return f"K_{self.n - self.k - 1}+K_{self.k + 1}"
        return f"{self.family.value}_{self.k}({self.n})"


def build_extremal(spec: ExtremalSpec) -> tuple[Graph, tuple[range, range, range]]:
    """Canonical extremal graph with vertices ordered X, then Y, then Z.

    * L: X = the K_k side, Y = the shared vertex, Z = the rest of K_{n-k}.
    * M, N: X = the independent vertices, Y = their k common neighbours.
    * SPLIT: X = the K_{k+1} component, Y empty, Z = the K_{n-k-1} component.
    """
    X, Y, Z = spec.partition()
    edges: list[Edge] = []

    def clique(vs):
        vs = list(vs)
        edges.extend((vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))

    fam = spec.family
    if fam is Family.L:
        clique(list(X) + list(Y))
        clique(list(Y) + list(Z))
    elif fam in (Family.M, Family.N):
        clique(list(Y) + list(Z))
        edges.extend((x, y) for x in X for y in Y)
    else:
        clique(X)
        clique(Z)
    return Graph(spec.n, edges), (X, Y, Z)


def extremal_graph(family: "str | Family", k: int, n: int) -> Graph:
    return build_extremal(ExtremalSpec(Family.parse(family), k, n))[0]


def cycle_n_bound(k: int) -> Fraction:
    """Order bound of the spectral cycle condition, k^3/2 + k + 4."""
    return Fraction(k**3, 2) + k + 4


def path_n_bound(k: int) -> Fraction:
    """Order bound of the spectral path condition, k^3/2 + k^2/2 + k + 5."""
    return Fraction(k**3 + k**2, 2) + k + 5
