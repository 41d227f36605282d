"""How close the n-bounds are to the true point where one-edge deletions fall below the threshold."""

# %%
from spectral_ham.tightness import prop1_verify, prop2_verify, threshold_scan

# %% Test-vector Rayleigh quotients against the threshold, for M_2 minus a Z-Z edge
for n in range(5, 9):
    r = prop1_verify(2, n)
    print(f"n={n} rayleigh={float(r.rayleigh):.6f} threshold={r.threshold} lambda_lo={float(r.lambda_lo):.6f}")

# %% The same for N_2, threshold n-k-2
for n in range(5, 11):
    r = prop2_verify(2, n)
    print(f"n={n} rayleigh={float(r.rayleigh):.6f} threshold={r.threshold} strict={r.strict}")

# %% Certified regimes per n
for fam in ("M", "N"):
    res = threshold_scan(fam, 2, range(5, 16))
    print(fam, [(row.n, row.regime) for row in res.rows])
    print(f"  crossover={res.crossover} bound={float(res.theorem_bound)} gap={res.gap}")
