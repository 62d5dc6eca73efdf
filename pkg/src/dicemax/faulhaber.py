"""Bernoulli numbers and power sums via Faulhaber's polynomial.

The Bernoulli numbers use the B1 = -1/2 convention. With that choice the
power sum is

    sum_{i=1}^{n} i**r = 1/(r+1) * sum_{j=0}^{r} (-1)**j C(r+1, j) B_j n**(r+1-j)

Under the B1 = +1/2 convention the alternating sign must be dropped; mixing
the two silently gives wrong sums.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import comb

__all__ = [
    "BernoulliTable",
    "bernoulli_table",
    "faulhaber_sum",
    "naive_power_sum",
]


class BernoulliTable(tuple):
    """Immutable sequence ``B_0 .. B_max_index`` of exact rationals."""

    __slots__ = ()

    @property
    def max_index(self) -> int:
        return len(self) - 1

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(self)


@functools.lru_cache(maxsize=None)
def _bernoulli_prefix(max_index: int) -> tuple[Fraction, ...]:
    if max_index == 0:
        return (Fraction(1),)
    prev = _bernoulli_prefix(max_index - 1)
    m = max_index
    if m >= 3 and m % 2 == 1:
        return prev + (Fraction(0),)
    # sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m
    acc = sum((comb(m + 1, j) * b for j, b in enumerate(prev)), Fraction(0))
    return prev + (-acc / (m + 1),)


def bernoulli_table(max_index: int) -> BernoulliTable:
    """Return Bernoulli numbers ``B_0 .. B_max_index`` as exact fractions.

    Entries come from the recurrence ``sum_{j=0}^{m} C(m+1, j) B_j = 0``
    (m >= 1), which fixes ``B_1 = -1/2``. Odd entries past ``B_1`` are
    set to zero directly. Results are cached, so repeated calls are cheap.

    >>> bernoulli_table(4)
    (Fraction(1, 1), Fraction(-1, 2), Fraction(1, 6), Fraction(0, 1), Fraction(-1, 30))
    """
    if max_index < 0:
        raise ValueError(f"max_index must be >= 0, got {max_index}")
    # build bottom-up so deep tables don't hit the recursion limit
    for k in range(0, max_index + 1, 256):
        _bernoulli_prefix(k)
    return BernoulliTable(_bernoulli_prefix(max_index))


def faulhaber_sum(n: int, r: int) -> int:
    """Exact ``sum_{i=1}^{n} i**r`` in O(r**2) operations, independent of n."""
    if n < 0 or r < 0:
        raise ValueError(f"need n >= 0 and r >= 0, got n={n}, r={r}")
    if n == 0:
        return 0
    bern = bernoulli_table(r)
    total = Fraction(0)
    for j in range(r + 1):
        b = bern[j]
        if b == 0:
            continue
        term = comb(r + 1, j) * b * n ** (r + 1 - j)
        total += -term if j % 2 else term
    total /= r + 1
    if total.denominator != 1:
        raise AssertionError(
            f"Faulhaber polynomial did not reduce to an integer at n={n}, r={r}: {total}"
        )
    return total.numerator


def naive_power_sum(n: int, r: int) -> int:
    """Reference loop for ``sum_{i=1}^{n} i**r``; O(n)."""
    if n < 0 or r < 0:
        raise ValueError(f"need n >= 0 and r >= 0, got n={n}, r={r}")
    return sum(i**r for i in range(1, n + 1))
