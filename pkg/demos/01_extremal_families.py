"""The four extremal families, their partitions and where their spectral radii sit."""

# %%
from spectral_ham import certify_cycle, certify_path, extremal_graph, ham_cycle, ham_path, spectral_radius
from spectral_ham.graph import ExtremalSpec
from spectral_ham.quotient import quotient_lambda

# %% Sizes, edge counts and minimum degree for k = 2, n = 12
for fam in ("L", "M", "N", "SPLIT"):
    spec = ExtremalSpec(fam, 2, 12)
    G = extremal_graph(fam, 2, 12)
    print(f"{spec.name:12s} sizes={spec.sizes} m={G.m} delta={G.min_degree}")

# %% None of them is traceable or Hamiltonian in the way its theorem forbids
for fam, finder in (("L", ham_cycle), ("M", ham_cycle), ("N", ham_path), ("SPLIT", ham_path)):
    print(fam, "witness:", finder(extremal_graph(fam, 2, 12)))

# %% Power iteration and the quotient route agree on lambda
for fam in ("L", "M", "N"):
    est = spectral_radius(extremal_graph(fam, 2, 12))
    qs = quotient_lambda(ExtremalSpec(fam, 2, 12))
    print(f"{fam}: power [{float(est.lambda_lo):.12f}, {float(est.lambda_hi):.12f}]  quotient {qs.lam:.12f}")

# %% The certifier names them as the exceptions
print(certify_cycle(extremal_graph("M", 2, 12)).kind.value, "M")
print(certify_cycle(extremal_graph("L", 2, 12)).kind.value, "L")
print(certify_path(extremal_graph("N", 2, 14)).kind.value, "N")
print(certify_path(extremal_graph("SPLIT", 2, 14)).kind.value, "SPLIT")
