from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dicemax import (
    ConvergenceRow,
    DomainError,
    Mode,
    convergence_table,
    gain_loss_limit,
    limit_ratio,
    relative_gain,
    relative_loss,
)
from oracles import enumerated_mean


@pytest.mark.parametrize(
    "mode, r, expected",
    [("advantage", 2, Fraction(2, 3)), ("disadvantage", 3, Fraction(1, 4)), (Mode.ADVANTAGE, 1, Fraction(1, 2))],
)
def test_limit_ratio(mode, r, expected):
    assert limit_ratio(mode, r) == expected


def test_limit_ratio_rejects_single_and_bad_rolls():
    with pytest.raises(DomainError):
        limit_ratio(Mode.SINGLE, 1)
    with pytest.raises(DomainError):
        limit_ratio(Mode.ADVANTAGE, 0)


def test_relative_gain_and_loss_examples():
    assert relative_gain(2, 6) == Fraction(5, 18)
    assert relative_gain(2, 20) == Fraction(19, 60)
    assert relative_loss(2, 6) == Fraction(5, 18)
    # E[min of 3d4] = 25/16 by enumeration
    assert enumerated_mean(3, 4, min) == Fraction(25, 16)
    assert relative_loss(3, 4) == Fraction(3, 8)
    assert relative_gain(1, 13) == relative_loss(1, 13) == 0


@pytest.mark.parametrize("r, expected", [(1, 0), (2, Fraction(1, 3)), (4, Fraction(3, 5))])
def test_gain_loss_limit(r, expected):
    assert gain_loss_limit(r) == expected


@given(st.integers(1, 8), st.integers(2, 40))
def test_gain_equals_loss(r, s):
    assert relative_gain(r, s) == relative_loss(r, s)


@settings(max_examples=200)
@given(st.integers(1, 8), st.integers(2, 10**4))
def test_sandwich_bounds(r, s):
    hi, lo = (convergence_table(m, r, [s])[0] for m in (Mode.ADVANTAGE, Mode.DISADVANTAGE))
    assert 0 < hi.gap <= Fraction(1, s)
    # keep-lowest also approaches its limit from above; the two gaps sum to 1/s
    assert 0 < lo.gap < Fraction(1, s)
    assert hi.gap + lo.gap == Fraction(1, s)


@pytest.mark.parametrize("r", range(2, 7))
def test_gain_converges_along_doubling_schedule(r):
    schedule = [10 * 2**k for k in range(8)]
    dev = [abs(relative_gain(r, s) - gain_loss_limit(r)) for s in schedule]
    assert all(b < a for a, b in zip(dev, dev[1:]))


def test_convergence_table_examples():
    rows = convergence_table("advantage", 2, [10, 100, 1000])
    assert rows[0].ratio == Fraction(143, 200)
    assert rows[1].ratio == Fraction(67165, 100000)
    assert all(row.limit == Fraction(2, 3) for row in rows)
    gaps = [row.gap for row in rows]
    assert all(g > 0 for g in gaps) and gaps == sorted(gaps, reverse=True)
    assert 0 < rows[1].gap <= Fraction(1, 100)

    (low,) = convergence_table("disadvantage", 2, [10])
    assert low.ratio == (1 + Fraction(285, 100)) / 10 == Fraction(77, 200)


def test_convergence_table_single_mode_extension():
    rows = convergence_table(Mode.SINGLE, 1, [2, 10])
    assert [r.ratio for r in rows] == [Fraction(3, 4), Fraction(11, 20)]
    assert rows[0].limit == Fraction(1, 2)


@pytest.mark.parametrize("schedule", [[], [10, 10], [100, 10], [1, 5]])
def test_convergence_table_bad_schedule(schedule):
    with pytest.raises(DomainError):
        convergence_table("advantage", 2, schedule)


def test_row_rejects_inconsistent_gap():
    with pytest.raises(DomainError):
        ConvergenceRow(10, Fraction(1), Fraction(1, 2), Fraction(1, 3))


def test_huge_sides_uses_fast_path():
    (row,) = convergence_table("advantage", 3, [10**18])
    assert 0 < row.gap <= Fraction(1, 10**18)
