from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dicemax import (
    DegenerateExperimentWarning,
    DomainError,
    ExperimentSpec,
    Mode,
    ResourceError,
    expected_value,
    expected_value_via_pmf,
    frequency,
    frequency_advantage_binomial,
    frequency_advantage_closed,
    frequency_disadvantage_binomial,
    frequency_disadvantage_closed,
    pmf,
)
from oracles import enumerated_frequencies, enumerated_mean

A = ExperimentSpec.advantage
D = ExperimentSpec.disadvantage

rolls = st.integers(1, 8)
sides = st.integers(2, 40)


# --- spec validation -------------------------------------------------------

@pytest.mark.parametrize("args", [(1, 1, Mode.SINGLE), (6, 0, Mode.ADVANTAGE), (6, 2, Mode.SINGLE), (0, 2, "advantage")])
def test_spec_rejects_invalid(args):
    with pytest.raises(DomainError):
        ExperimentSpec(*args)


def test_spec_rejects_unknown_mode():
    with pytest.raises(DomainError, match="unknown mode"):
        ExperimentSpec(6, 2, "middle")


def test_spec_accepts_mode_strings():
    assert ExperimentSpec(6, 2, "Advantage").mode is Mode.ADVANTAGE


def test_single_roll_advantage_warns():
    with pytest.warns(DegenerateExperimentWarning):
        ExperimentSpec.advantage(1, 6)


# --- frequencies -----------------------------------------------------------

@pytest.mark.parametrize(
    "fn, i, spec, expected",
    [
        (frequency_advantage_closed, 3, A(2, 6), 5),
        (frequency_advantage_closed, 6, A(2, 6), 11),
        (frequency_advantage_closed, 1, A(5, 9), 1),
        (frequency_advantage_binomial, 3, A(2, 6), 5),
        (frequency_advantage_binomial, 1, A(4, 8), 1),
        (frequency_advantage_binomial, 2, A(3, 6), 7),
        (frequency_disadvantage_closed, 4, D(2, 6), 5),
        (frequency_disadvantage_closed, 6, D(3, 6), 1),
        (frequency_disadvantage_closed, 1, D(2, 6), 11),
        (frequency_disadvantage_binomial, 4, D(2, 6), 5),
        (frequency_disadvantage_binomial, 6, D(3, 6), 1),
        (frequency_disadvantage_binomial, 5, D(2, 6), 3),
    ],
)
def test_frequency_examples(fn, i, spec, expected):
    assert fn(i, spec) == expected


@pytest.mark.parametrize("r, s", [(2, 6), (3, 6), (3, 4), (4, 5), (1, 7)])
def test_frequencies_match_enumeration(r, s):
    hi = enumerated_frequencies(r, s, max)
    lo = enumerated_frequencies(r, s, min)
    assert tuple(frequency_advantage_closed(i, A(r, s)) for i in range(1, s + 1)) == hi
    assert tuple(frequency_disadvantage_binomial(i, D(r, s)) for i in range(1, s + 1)) == lo


@pytest.mark.parametrize("i", [0, 7, -1])
def test_frequency_out_of_range(i):
    with pytest.raises(DomainError, match=r"1\.\.6"):
        frequency_advantage_closed(i, A(2, 6))
    with pytest.raises(DomainError, match=r"1\.\.6"):
        frequency_disadvantage_binomial(i, D(2, 6))


def test_frequency_wrong_mode():
    with pytest.raises(DomainError):
        frequency_advantage_closed(1, D(2, 6))
    with pytest.raises(DomainError):
        frequency_disadvantage_closed(1, A(2, 6))


@given(rolls, sides, st.data())
def test_closed_and_binomial_forms_agree(r, s, data):
    i = data.draw(st.integers(1, s))
    assert frequency_advantage_binomial(i, A(r, s)) == frequency_advantage_closed(i, A(r, s))
    assert frequency_disadvantage_binomial(i, D(r, s)) == frequency_disadvantage_closed(i, D(r, s))


@given(rolls, sides)
def test_reflection_symmetry(r, s):
    for i in range(1, s + 1):
        assert frequency_advantage_closed(i, A(r, s)) == frequency_disadvantage_closed(s + 1 - i, D(r, s))


# --- pmf -------------------------------------------------------------------

def test_pmf_single_uniform():
    dist = pmf(ExperimentSpec.single(4))
    assert dist.probabilities == (Fraction(1, 4),) * 4
    assert dist.frequencies == (1, 1, 1, 1)


def test_pmf_two_rolls():
    assert pmf(A(2, 6)).frequencies == (1, 3, 5, 7, 9, 11)
    assert pmf(D(2, 6)).frequencies == (11, 9, 7, 5, 3, 1)
    assert pmf(A(2, 6)).probability(6) == Fraction(11, 36)


@given(rolls, sides, st.sampled_from([Mode.ADVANTAGE, Mode.DISADVANTAGE]))
def test_pmf_conserves_sample_space(r, s, mode):
    spec = ExperimentSpec(s, r, mode)
    dist = pmf(spec)
    assert len(dist.frequencies) == len(dist.probabilities) == s
    assert sum(dist.frequencies) == s**r
    assert sum(dist.probabilities) == 1
    assert all(p == Fraction(f, s**r) for f, p in zip(dist.frequencies, dist.probabilities))
    assert [frequency(i, spec) for i in range(1, s + 1)] == list(dist.frequencies)


# --- expected values -------------------------------------------------------

@pytest.mark.parametrize(
    "spec, expected",
    [
        (ExperimentSpec.single(20), Fraction(21, 2)),
        (A(2, 6), Fraction(161, 36)),
        (A(2, 20), Fraction(553, 40)),
        (D(2, 6), Fraction(91, 36)),
        (D(3, 4), Fraction(25, 16)),
        (ExperimentSpec.single(9), Fraction(5)),
    ],
)
def test_expected_value_examples(spec, expected):
    assert expected_value(spec) == expected
    assert expected_value_via_pmf(spec) == expected


@pytest.mark.parametrize("r, s", [(2, 6), (2, 20), (3, 4), (3, 7), (4, 5)])
def test_expected_value_matches_enumeration(r, s):
    assert expected_value(A(r, s)) == enumerated_mean(r, s, max)
    assert expected_value(D(r, s)) == enumerated_mean(r, s, min)


@given(rolls, sides)
def test_complementarity(r, s):
    assert expected_value(A(r, s)) + expected_value(D(r, s)) == s + 1


@given(sides)
def test_single_roll_degenerates(s):
    for spec in (A(1, s), D(1, s), ExperimentSpec.single(s)):
        assert expected_value(spec) == Fraction(s + 1, 2)


@given(st.integers(1, 12), st.integers(2, 60))
def test_monotone_in_rolls(r, s):
    assert expected_value(A(r + 1, s)) > expected_value(A(r, s))
    assert expected_value(D(r + 1, s)) < expected_value(D(r, s))


@given(rolls, st.integers(2, 12))
def test_oracle_equivalence(r, s):
    for mode in Mode:
        if mode is Mode.SINGLE and r != 1:
            continue
        spec = ExperimentSpec(s, r, mode)
        assert expected_value(spec) == expected_value_via_pmf(spec, work_bound=s**r)


@pytest.mark.parametrize("r, s", [(3, 50), (5, 17), (1, 1000)])
def test_fast_path_agrees_with_loop(r, s):
    for spec in (A(r, s), D(r, s)):
        assert expected_value(spec, threshold=1) == expected_value(spec, threshold=10**9)


def test_via_pmf_work_bound():
    with pytest.raises(ResourceError):
        expected_value_via_pmf(A(8, 20))
    assert expected_value_via_pmf(A(8, 20), work_bound=20**8) == expected_value(A(8, 20))


def test_fixed_sides_limit():
    gaps = [6 - expected_value(A(r, 6)) for r in range(1, 41)]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < Fraction(1, 1000)
    assert expected_value(D(40, 6)) - 1 < Fraction(1, 1000)
    assert expected_value(D(40, 6)) - 1 == gaps[-1]
