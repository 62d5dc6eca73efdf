"""
Large dice: E/s, gain and loss
==============================

With the number of rolls fixed and the die growing, E/s tends to r/(r+1)
when keeping the highest and to 1/(r+1) when keeping the lowest. The gain
over a single roll tends to (r-1)/(r+1).
"""

# %%
from dicemax import (
    bernoulli_table,
    convergence_table,
    faulhaber_sum,
    gain_loss_limit,
    relative_gain,
)

print(list(bernoulli_table(10)))

# Faulhaber sums cost O(r**2) whatever n is
print(faulhaber_sum(10**18, 3))

# %%
schedule = [10, 100, 1000, 10**4, 10**6, 10**12, 10**18]
for mode in ("advantage", "disadvantage"):
    print(mode)
    for row in convergence_table(mode, 3, schedule):
        print(f"  s={row.sides:<20} E/s = {float(row.ratio):.12f}  gap = {float(row.gap):.3e}")

# %%
# Advantage on a d20 is worth about +31.7% over a single roll; the limit is +1/3.
for r in (2, 3, 4):
    print(r, float(relative_gain(r, 20)), gain_loss_limit(r))
