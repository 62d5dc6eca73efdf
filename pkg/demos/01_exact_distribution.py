"""
Rolling with advantage: the exact distribution
==============================================

Roll a d20 twice and keep the higher roll. How often does each face come
up, and what is the average?
"""

# %%
from fractions import Fraction

from dicemax import ExperimentSpec, expected_value, pmf

adv = ExperimentSpec.advantage(rolls=2, sides=20)
dist = pmf(adv)

# counts are over all 20**2 = 400 ordered pairs; face i shows up 2i - 1 times
for face, (count, p) in enumerate(zip(dist.frequencies, dist.probabilities), 1):
    print(f"{face:>2}  {count:>3}/400  {'#' * count}")

# %%
# The mean is an exact fraction. Keeping the lower roll mirrors it, and
# the two means always add up to s + 1.
dis = ExperimentSpec.disadvantage(rolls=2, sides=20)
hi, lo = expected_value(adv), expected_value(dis)
print(hi, float(hi))
print(lo, float(lo))
print(hi + lo == 21)

# %%
# More rolls push the mean toward the top face, but with diminishing returns.
for r in (1, 2, 3, 4, 8, 16):
    ev = expected_value(ExperimentSpec.advantage(r, 20))
    print(f"r={r:>2}  E = {float(ev):8.4f}   20 - E = {float(20 - ev):.5f}")

# %%
# Exact rationals never overflow: 20**15 is already past 2**64.
print(expected_value(ExperimentSpec.advantage(15, 20)))
print(Fraction(sum(pmf(ExperimentSpec.advantage(15, 20)).probabilities)))
