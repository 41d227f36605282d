"""Random graphs through every engine, checked against the exact oracle."""

# %%
import random
from collections import Counter

import numpy as np

from spectral_ham import SoundnessError, certify_cycle, certify_path, ham_cycle, ham_path
from spectral_ham.graph import Graph, build_complete, build_edgeless, join

rng = random.Random(0)


def sample(n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


# %% Verdict counts on 300 dense graphs
tally = Counter()
for _ in range(300):
    G = sample(rng.randint(8, 13), rng.uniform(0.6, 1.0))
    if G.min_degree < 1:
        continue
    for certify, oracle in ((certify_cycle, ham_cycle), (certify_path, ham_path)):
        v = certify(G, 1)
        tally[v.theorem, v.kind.value] += 1
        if v.certified:
            assert oracle(G) is not None
for key, count in sorted(tally.items()):
    print(key, count)

# %% Every premise of the path result holds for K_3 v K5-bar at k = 1, yet no Hamiltonian path exists
G = join(build_complete(3), build_edgeless(5))
print("n =", G.n, "delta =", G.min_degree, "lambda =", max(np.linalg.eigvalsh(G.adjacency_matrix())))
print("oracle path:", ham_path(G))
try:
    certify_path(G, 1)
except SoundnessError as exc:
    print("contradiction:", exc)
