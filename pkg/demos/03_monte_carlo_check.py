"""
Checking the exact engine by simulation
=======================================

Simulate keep-highest/keep-lowest rolls with a seeded counter-based
generator and compare with the exact answer.
"""

# %%
from dicemax import ExperimentSpec, empirical_pmf_distance, expected_value, pmf, simulate

spec = ExperimentSpec.advantage(2, 6)
res = simulate(spec, trials=10**6, seed=2024, workers=4)

exact = float(expected_value(spec))
z = (res.empirical_mean - exact) / res.standard_error
print(f"simulated {res.empirical_mean:.5f} +/- {res.standard_error:.5f}, exact {exact:.5f}, z = {z:+.2f}")
print("total variation distance:", empirical_pmf_distance(res, pmf(spec)))

# %%
# Same seed, same counts, regardless of the worker count.
print(simulate(spec, 10**6, 2024, workers=1) == res)

# %%
for r in (1, 2, 3, 5):
    for mode in ("advantage", "disadvantage"):
        s = ExperimentSpec(20, r, mode)
        out = simulate(s, 100_000, seed=r)
        print(f"{mode:>12} r={r}  sim {out.empirical_mean:7.3f}  exact {float(expected_value(s)):7.3f}")
