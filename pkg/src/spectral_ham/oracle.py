"""Exact Hamiltonian cycle / path / connectedness decisions for small graphs.

Two independent engines are provided.  The default for n <= 20 is a
subset dynamic program: ``dp[mask]`` is the bitset of vertices at which some
path covering exactly ``mask`` can end.  It is evaluated one popcount level at
a time with numpy over all masks of the level.  Above n = 20 (up to the hard
guard n = 24) a backtracking search with degree and connectivity cuts is used;
both engines can be requested explicitly so they can be cross-checked.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from .graph import Graph

MAX_ORACLE_N = 24
MAX_DP_N = 20
MAX_HAMCONNECTED_N = 16


class OracleOutOfRange(ValueError):
    """Raised instead of answering when the graph is beyond the oracle's guard."""


def _guard(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise OracleOutOfRange(f"oracle out of range: {what} supports n <= {limit}, got n={n}")


@lru_cache(maxsize=4)
def _levels(n: int) -> tuple[np.ndarray, ...]:
    masks = np.arange(1 << n, dtype=np.uint32)
    pc = np.bitwise_count(masks)
    return tuple(masks[pc == level] for level in range(n + 1))


def _subset_dp(adj: Sequence[int], n: int, starts: Sequence[int], anchor: int | None = None) -> np.ndarray:
    """Path-end table over all masks.  With ``anchor`` set only masks containing it are filled."""
    dp = np.zeros(1 << n, dtype=np.uint32)
    for s in starts:
        dp[1 << s] = 1 << s
    adj_np = np.asarray(adj, dtype=np.uint32)
    levels = _levels(n)
    for level in range(2, n + 1):
        masks = levels[level]
        if anchor is not None:
            masks = masks[(masks >> np.uint32(anchor)) & np.uint32(1) == 1]
        for v in range(n):
            if v == anchor:
                continue
            bit = np.uint32(1 << v)
            sel = masks[(masks & bit) != 0]
            if sel.size == 0:
                continue
            hit = (dp[sel ^ bit] & adj_np[v]) != 0
            dp[sel[hit]] |= bit
    return dp


def _lowest(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


def _unwind(dp: np.ndarray, adj: Sequence[int], full: int, end: int) -> list[int]:
    path = [end]
    mask, v = full, end
    while mask != 1 << v:
        mask ^= 1 << v
        v = _lowest(int(dp[mask]) & adj[v])
        path.append(v)
    path.reverse()
    return path


def _dp_cycle(G: Graph) -> list[int] | None:
    n, adj = G.n, G.adjacency_bits
    dp = _subset_dp(adj, n, starts=[0], anchor=0)
    full = (1 << n) - 1
    ends = int(dp[full]) & adj[0]
    if not ends:
        return None
    return _unwind(dp, adj, full, _lowest(ends))


def _dp_path(G: Graph) -> list[int] | None:
    n, adj = G.n, G.adjacency_bits
    dp = _subset_dp(adj, n, starts=range(n))
    full = (1 << n) - 1
    ends = int(dp[full])
    if not ends:
        return None
    return _unwind(dp, adj, full, _lowest(ends))


def _connected_within(adj: Sequence[int], region: int) -> bool:
    if not region:
        return True
    seen = region & -region
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= region & ~seen
        seen |= nxt
        frontier = nxt
    return seen == region


def _bt_cycle(G: Graph) -> list[int] | None:
    n, adj = G.n, G.adjacency_bits
    if any(d < 2 for d in G.degrees):
        return None
    full = (1 << n) - 1
    start = min(range(n), key=lambda v: (G.degrees[v], v))
    path = [start]

    def feasible(cur: int, visited: int) -> bool:
        rest = full & ~visited
        ends = (1 << cur) | (1 << start)
        pool = rest | ends
        r = rest
        while r:
            low = r & -r
            if (adj[low.bit_length() - 1] & pool).bit_count() < 2:
                return False
            r ^= low
        return _connected_within(adj, rest | (1 << cur))

    def extend(cur: int, visited: int) -> bool:
        if visited == full:
            return bool(adj[cur] >> start & 1)
        if not feasible(cur, visited):
            return False
        cand = adj[cur] & ~visited
        while cand:
            low = cand & -cand
            nxt = low.bit_length() - 1
            path.append(nxt)
            if extend(nxt, visited | low):
                return True
            path.pop()
            cand ^= low
        return False

    return path if extend(start, 1 << start) else None


def _bt_path(G: Graph) -> list[int] | None:
    n, adj = G.n, G.adjacency_bits
    full = (1 << n) - 1
    if not _connected_within(adj, full):
        return None
    if sum(1 for d in G.degrees if d == 1) > 2:
        return None

    def feasible(cur: int, visited: int) -> bool:
        rest = full & ~visited
        pool = rest | (1 << cur)
        leaves = 0
        r = rest
        while r:
            low = r & -r
            d = (adj[low.bit_length() - 1] & pool).bit_count()
            if d == 0:
                return False
            if d == 1:
                leaves += 1
                if leaves > 1:
                    return False
            r ^= low
        return _connected_within(adj, pool)

    def extend(path: list[int], cur: int, visited: int) -> bool:
        if visited == full:
            return True
        if not feasible(cur, visited):
            return False
        cand = adj[cur] & ~visited
        while cand:
            low = cand & -cand
            nxt = low.bit_length() - 1
            path.append(nxt)
            if extend(path, nxt, visited | low):
                return True
            path.pop()
            cand ^= low
        return False

    for start in sorted(range(n), key=lambda v: (G.degrees[v], v)):
        path = [start]
        if extend(path, start, 1 << start):
            return path
    return None


def ham_cycle(G: Graph, method: str = "auto") -> list[int] | None:
    """A Hamiltonian cycle as a vertex sequence (closing edge implied), or ``None``."""
    _guard(G.n, MAX_ORACLE_N, "ham_cycle")
    if G.n < 3:
        return None
    if method == "auto":
        method = "dp" if G.n <= MAX_DP_N else "backtrack"
    if method == "dp":
        _guard(G.n, MAX_DP_N, "dynamic programming")
        return _dp_cycle(G)
    if method == "backtrack":
        return _bt_cycle(G)
    raise ValueError(f"unknown method {method!r}")


def ham_path(G: Graph, method: str = "auto") -> list[int] | None:
    _guard(G.n, MAX_ORACLE_N, "ham_path")
    if G.n == 0:
        return []
    if G.n == 1:
        return [0]
    if method == "auto":
        method = "dp" if G.n <= MAX_DP_N else "backtrack"
    if method == "dp":
        _guard(G.n, MAX_DP_N, "dynamic programming")
        return _dp_path(G)
    if method == "backtrack":
        return _bt_path(G)
    raise ValueError(f"unknown method {method!r}")


def is_ham_connected(G: Graph) -> bool:
    """True iff every pair of distinct vertices is joined by a Hamiltonian path."""
    n = G.n
    _guard(n, MAX_HAMCONNECTED_N, "is_ham_connected")
    if n <= 1:
        return True
    if n == 2:
        return G.has_edge(0, 1)
    if G.min_degree < 2:
        return False
    full = (1 << n) - 1
    for s in range(n):
        dp = _subset_dp(G.adjacency_bits, n, starts=[s], anchor=s)
        if int(dp[full]) != full ^ (1 << s):
            return False
    return True


def is_hamiltonian_cycle(G: Graph, seq: Sequence[int]) -> bool:
    n = G.n
    if n < 3 or len(seq) != n or sorted(seq) != list(range(n)):
        return False
    return all(G.has_edge(seq[i], seq[(i + 1) % n]) for i in range(n))


def is_hamiltonian_path(G: Graph, seq: Sequence[int]) -> bool:
    n = G.n
    if len(seq) != n or sorted(seq) != list(range(n)):
        return False
    return all(G.has_edge(seq[i], seq[i + 1]) for i in range(n - 1))
