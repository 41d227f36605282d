"""Bondy-Chvatal closure, Ore and Chvatal degree conditions, closure unwinding."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, degrees_ascending, join, build_complete


@dataclass(frozen=True)
class ClosureTrace:
    """Edges added while closing a graph, in order, with the degree sum that licensed each."""

    threshold: int
    added_edges: tuple[tuple[int, int, int], ...]

    def replay(self, G: Graph) -> Graph:
        adj = list(G.adjacency_bits)
        for u, v, dsum in self.added_edges:
            if adj[u] >> v & 1:
                raise ValueError(f"trace adds existing edge ({u}, {v})")
            if adj[u].bit_count() + adj[v].bit_count() != dsum or dsum < self.threshold:
                raise ValueError(f"trace entry ({u}, {v}, {dsum}) does not replay")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph._from_bitsets(adj)


@dataclass(frozen=True)
class ChvatalWitness:
    s: int
    kind: str  # "cycle" or "path"


def k_closure(
    G: Graph, k: int, order: Sequence[tuple[int, int]] | None = None
) -> tuple[Graph, ClosureTrace]:
    """Repeatedly join nonadjacent pairs with degree sum >= k until none is left.

    Pairs are swept in lexicographic order unless ``order`` gives another scan
    order; sweeps repeat until a full sweep adds nothing.
    """
    if k < 0:
        raise ValueError(f"closure threshold must be >= 0, got {k}")
    n = G.n
    adj = list(G.adjacency_bits)
    deg = list(G.degrees)
    pairs = list(order) if order is not None else [(u, v) for u in range(n) for v in range(u + 1, n)]
    added = []
    changed = True
    while changed:
        changed = False
        for u, v in pairs:
            if adj[u] >> v & 1:
                continue
            s = deg[u] + deg[v]
            if s >= k:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                deg[u] += 1
                deg[v] += 1
                added.append((u, v, s))
                changed = True
    return Graph._from_bitsets(adj), ClosureTrace(k, tuple(added))


def closure_main_property_check(G: Graph, k: int) -> bool:
    deg = G.degrees
    return all(deg[u] + deg[v] <= k - 1 for u, v in G.non_edges())


def ore_cycle_check(G: Graph) -> bool:
    if G.n < 3:
        raise ValueError(f"Ore's cycle condition needs n >= 3, got n={G.n}")
    deg = G.degrees
    return all(deg[u] + deg[v] >= G.n for u, v in G.non_edges())


def ore_path_check(G: Graph) -> bool:
    """d_u + d_v >= n - 1 for all nonadjacent pairs, i.e. cl_{n-1}(G) is complete."""
    if G.n < 2:
        raise ValueError(f"Ore's path condition needs n >= 2, got n={G.n}")
    deg = G.degrees
    return all(deg[u] + deg[v] >= G.n - 1 for u, v in G.non_edges())


class OreOutcome(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_2_CONNECTED = "not-2-connected"


def is_two_connected(G: Graph) -> bool:
    if G.n < 3 or not G.is_connected():
        return False
    for cut in range(G.n):
        rest = [v for v in range(G.n) if v != cut]
        if not G.induced(rest).is_connected():
            return False
    return True


def ore_hamconnected_check(G: Graph) -> OreOutcome:
    """Degree-sum condition d_u + d_v >= n + 1 for Hamiltonian-connectedness."""
    if not is_two_connected(G):
        return OreOutcome.NOT_2_CONNECTED
    deg = G.degrees
    ok = all(deg[u] + deg[v] >= G.n + 1 for u, v in G.non_edges())
    return OreOutcome.HOLDS if ok else OreOutcome.FAILS


def chvatal_cycle_witness(G: Graph) -> ChvatalWitness | None:
    """Least s < n/2 with d_s <= s and d_{n-s} <= n-s-1 (degrees ascending, 1-indexed)."""
    n = G.n
    if n < 3:
        raise ValueError(f"Chvatal's cycle condition needs n >= 3, got n={n}")
    d = degrees_ascending(G)
    s = 1
    while 2 * s < n:
        if d[s - 1] <= s and d[n - s - 1] <= n - s - 1:
            return ChvatalWitness(s, "cycle")
        s += 1
    return None


def chvatal_path_witness(G: Graph) -> ChvatalWitness | None:
    """Least s < (n+1)/2 with d_s <= s-1 and d_{n-s+1} <= n-s-1."""
    n = G.n
    if n < 2:
        raise ValueError(f"Chvatal's path condition needs n >= 2, got n={n}")
    d = degrees_ascending(G)
    s = 1
    while 2 * s < n + 1:
        if d[s - 1] <= s - 1 and d[n - s] <= n - s - 1:
            return ChvatalWitness(s, "path")
        s += 1
    return None


def _rotate(adj: list[int], cycle: list[int], u: int, v: int) -> list[int]:
    n = len(cycle)
    i = cycle.index(u)
    # orient so the cycle reads u ... v with {u, v} as the closing edge
    if cycle[(i + 1) % n] == v:
        p = [cycle[(i - j) % n] for j in range(n)]
    else:
        p = [cycle[(i + j) % n] for j in range(n)]
    assert p[0] == u and p[-1] == v
    for j in range(n - 1):
        if adj[u] >> p[j + 1] & 1 and adj[v] >> p[j] & 1:
            return p[: j + 1] + p[j + 1 :][::-1]
    raise ValueError(f"no crossing pair for edge ({u}, {v}); trace precondition violated")


def cycle_from_closure(G: Graph, trace: ClosureTrace, cycle_in_closure: Sequence[int]) -> list[int]:
    """Turn a Hamiltonian cycle of cl_n(G) into one of G by undoing the trace."""
    n = G.n
    if trace.threshold != n:
        raise ValueError(f"cycle unwinding needs the n-closure (threshold {n}), got {trace.threshold}")
    adj = list(trace.replay(G).adjacency_bits)
    cycle = list(cycle_in_closure)
    if sorted(cycle) != list(range(n)):
        raise ValueError("input is not a vertex permutation")
    for j in range(n):
        a, b = cycle[j], cycle[(j + 1) % n]
        if not adj[a] >> b & 1:
            raise ValueError(f"input cycle uses non-edge ({a}, {b}) of the closure")
    for u, v, _ in reversed(trace.added_edges):
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        i = cycle.index(u)
        if v in (cycle[(i + 1) % n], cycle[(i - 1) % n]):
            cycle = _rotate(adj, cycle, u, v)
    return cycle


def path_from_closure(G: Graph, trace: ClosureTrace, path_in_closure: Sequence[int]) -> list[int]:
    """Turn a Hamiltonian path of cl_{n-1}(G) into one of G.

    Works on G joined with one apex vertex: there the (n-1)-closure of G is the
    (n+1)-closure, and a path becomes a cycle through the apex.
    """
    n = G.n
    if trace.threshold != n - 1:
        raise ValueError(f"path unwinding needs the (n-1)-closure, got threshold {trace.threshold}")
    apex = n
    H = join(G, build_complete(1))
    shifted = ClosureTrace(n + 1, tuple((u, v, s + 2) for u, v, s in trace.added_edges))
    cycle = cycle_from_closure(H, shifted, list(path_in_closure) + [apex])
    i = cycle.index(apex)
    return cycle[i + 1 :] + cycle[:i]


def complete_closure_cycle(G: Graph) -> list[int] | None:
    """Hamiltonian cycle via the n-closure when that closure is complete, else ``None``."""
    if G.n < 3:
        return None
    closed, trace = k_closure(G, G.n)
    if closed.m != G.n * (G.n - 1) // 2:
        return None
    return cycle_from_closure(G, trace, list(range(G.n)))


def complete_closure_path(G: Graph) -> list[int] | None:
    if G.n < 2:
        return list(range(G.n))
    closed, trace = k_closure(G, G.n - 1)
    if closed.m != G.n * (G.n - 1) // 2:
        return None
    return path_from_closure(G, trace, list(range(G.n)))

