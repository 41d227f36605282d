import random

from hypothesis import strategies as st

from spectral_ham.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=10, min_p=0.0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    p = draw(st.floats(min_p, 1.0))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    return Graph(n, [e for e in pairs if rng.random() < p])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def permuted(G: Graph, rng: random.Random) -> Graph:
    perm = list(range(G.n))
    rng.shuffle(perm)
    return G.relabel(perm)
