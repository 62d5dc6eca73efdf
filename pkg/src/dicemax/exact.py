"""Exact outcome counts, PMFs and expected values for keep-highest/keep-lowest dice.

Every quantity here is an ``int`` or a :class:`fractions.Fraction`; there is
no floating point in this module. Outcomes are indexed 1..s at every public
boundary.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DegenerateExperimentWarning, DomainError, ResourceError
from .faulhaber import faulhaber_sum, naive_power_sum

__all__ = [
    "Mode",
    "ExperimentSpec",
    "OutcomePmf",
    "FAST_PATH_THRESHOLD",
    "DEFAULT_WORK_BOUND",
    "frequency_advantage_closed",
    "frequency_advantage_binomial",
    "frequency_disadvantage_closed",
    "frequency_disadvantage_binomial",
    "frequency",
    "pmf",
    "power_sum_below",
    "expected_value",
    "expected_value_via_pmf",
]

# expected_value switches from the O(s) loop to Faulhaber above this many sides
FAST_PATH_THRESHOLD = 10**6

# largest sample space (s**r points) expected_value_via_pmf agrees to handle
DEFAULT_WORK_BOUND = 10**7


class Mode(str, enum.Enum):
    SINGLE = "single"
    ADVANTAGE = "advantage"
    DISADVANTAGE = "disadvantage"

    @classmethod
    def parse(cls, value: "Mode | str") -> "Mode":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            names = ", ".join(m.value for m in cls)
            raise DomainError(f"unknown mode {value!r}; expected one of {names}") from None


@dataclass(frozen=True)
class ExperimentSpec:
    """A fair ``sides``-sided die rolled ``rolls`` times under ``mode``.

    Advantage and disadvantage accept ``rolls == 1``; that is the base
    experiment, and a :class:`DegenerateExperimentWarning` is issued.
    """

    sides: int
    rolls: int = 1
    mode: Mode = Mode.SINGLE

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", Mode.parse(self.mode))
        for name in ("sides", "rolls"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise DomainError(f"{name} must be an integer, got {value!r}")
        if self.sides < 2:
            raise DomainError(f"sides must be >= 2, got {self.sides}")
        if self.rolls < 1:
            raise DomainError(f"rolls must be >= 1, got {self.rolls}")
        if self.mode is Mode.SINGLE and self.rolls != 1:
            raise DomainError(f"single mode requires rolls == 1, got {self.rolls}")
        if self.mode is not Mode.SINGLE and self.rolls == 1:
            warnings.warn(
                f"{self.mode.value} with one roll is the base experiment",
                DegenerateExperimentWarning,
                stacklevel=3,
            )

    @classmethod
    def single(cls, sides: int) -> "ExperimentSpec":
        return cls(sides, 1, Mode.SINGLE)

    @classmethod
    def advantage(cls, rolls: int, sides: int) -> "ExperimentSpec":
        return cls(sides, rolls, Mode.ADVANTAGE)

    @classmethod
    def disadvantage(cls, rolls: int, sides: int) -> "ExperimentSpec":
        return cls(sides, rolls, Mode.DISADVANTAGE)

    @property
    def sample_space_size(self) -> int:
        return self.sides**self.rolls


@dataclass(frozen=True)
class OutcomePmf:
    """Outcome counts and probabilities, position ``k`` holding outcome ``k + 1``."""

    spec: ExperimentSpec
    frequencies: tuple[int, ...]
    probabilities: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        s = self.spec.sides
        if len(self.frequencies) != s or len(self.probabilities) != s:
            raise DomainError(f"expected {s} entries per sequence")
        if sum(self.frequencies) != self.spec.sample_space_size:
            raise DomainError("frequencies do not sum to sides**rolls")

    def frequency(self, outcome: int) -> int:
        _check_outcome(outcome, self.spec)
        return self.frequencies[outcome - 1]

    def probability(self, outcome: int) -> Fraction:
        _check_outcome(outcome, self.spec)
        return self.probabilities[outcome - 1]

    def mean(self) -> Fraction:
        return sum((i * p for i, p in enumerate(self.probabilities, 1)), Fraction(0))


def _check_outcome(i: int, spec: ExperimentSpec) -> None:
    if not 1 <= i <= spec.sides:
        raise DomainError(f"outcome must be in 1..{spec.sides}, got {i}")


def _check_mode(spec: ExperimentSpec, mode: Mode) -> None:
    if spec.mode is not mode:
        raise DomainError(f"expected a {mode.value} experiment, got {spec.mode.value}")


def frequency_advantage_closed(i: int, spec: ExperimentSpec) -> int:
    """Number of r-tuples whose maximum is ``i``: ``i**r - (i-1)**r``."""
    _check_mode(spec, Mode.ADVANTAGE)
    _check_outcome(i, spec)
    r = spec.rolls
    return i**r - (i - 1) ** r


def frequency_advantage_binomial(i: int, spec: ExperimentSpec) -> int:
    """Same count as :func:`frequency_advantage_closed`, by conditioning on how many rolls show ``i``.

    ``j`` rolls equal ``i`` and the other ``r - j`` each take one of the
    ``i - 1`` smaller faces.
    """
    _check_mode(spec, Mode.ADVANTAGE)
    _check_outcome(i, spec)
    r = spec.rolls
    return sum(comb(r, j) * (i - 1) ** (r - j) for j in range(1, r + 1))


def frequency_disadvantage_closed(i: int, spec: ExperimentSpec) -> int:
    """Number of r-tuples whose minimum is ``i``: ``(s-i+1)**r - (s-i)**r``."""
    _check_mode(spec, Mode.DISADVANTAGE)
    _check_outcome(i, spec)
    r, s = spec.rolls, spec.sides
    return (s - i + 1) ** r - (s - i) ** r


def frequency_disadvantage_binomial(i: int, spec: ExperimentSpec) -> int:
    _check_mode(spec, Mode.DISADVANTAGE)
    _check_outcome(i, spec)
    r, s = spec.rolls, spec.sides
    return sum(comb(r, j) * (s - i) ** (r - j) for j in range(1, r + 1))


def frequency(i: int, spec: ExperimentSpec) -> int:
    """Closed-form count for outcome ``i`` under any mode."""
    if spec.mode is Mode.ADVANTAGE:
        return frequency_advantage_closed(i, spec)
    if spec.mode is Mode.DISADVANTAGE:
        return frequency_disadvantage_closed(i, spec)
    _check_outcome(i, spec)
    return 1


def pmf(spec: ExperimentSpec) -> OutcomePmf:
    """Exact distribution of the kept value over all ``s**r`` ordered rolls."""
    s = spec.sides
    total = spec.sample_space_size
    if spec.mode is Mode.SINGLE:
        freqs = (1,) * s
    elif spec.mode is Mode.ADVANTAGE:
        r = spec.rolls
        powers = [i**r for i in range(s + 1)]
        freqs = tuple(powers[i] - powers[i - 1] for i in range(1, s + 1))
    else:
        r = spec.rolls
        powers = [k**r for k in range(s + 1)]
        freqs = tuple(powers[s - i + 1] - powers[s - i] for i in range(1, s + 1))
    probs = tuple(Fraction(f, total) for f in freqs)
    return OutcomePmf(spec, freqs, probs)


def power_sum_below(s: int, r: int, *, threshold: int = FAST_PATH_THRESHOLD) -> int:
    """``sum_{i=1}^{s-1} i**r``, by direct loop up to ``threshold`` sides, by Faulhaber beyond."""
    if s > threshold:
        return faulhaber_sum(s - 1, r)
    return naive_power_sum(s - 1, r)


def expected_value(spec: ExperimentSpec, *, threshold: int = FAST_PATH_THRESHOLD) -> Fraction:
    """Exact expected kept value.

    With ``T = sum_{i=1}^{s-1} i**r`` the mean is ``s - T/s**r`` when the
    highest roll is kept and ``1 + T/s**r`` when the lowest is. ``T`` comes
    from :func:`faulhaber_sum` once ``sides`` exceeds ``threshold``, which
    keeps ``s`` around 10**18 tractable.

    >>> expected_value(ExperimentSpec.advantage(2, 6))
    Fraction(161, 36)
    """
    s, r = spec.sides, spec.rolls
    if spec.mode is Mode.SINGLE:
        return Fraction(s + 1, 2)
    tail = Fraction(power_sum_below(s, r, threshold=threshold), s**r)
    if spec.mode is Mode.ADVANTAGE:
        return s - tail
    return 1 + tail


def expected_value_via_pmf(spec: ExperimentSpec, *, work_bound: int = DEFAULT_WORK_BOUND) -> Fraction:
    """``sum_i i * frequency_i / s**r`` straight from :func:`pmf`.

    Independent of the power-sum route, so it serves as a cross-check for
    :func:`expected_value`. Refuses sample spaces larger than ``work_bound``.
    """
    size = spec.sample_space_size
    if size > work_bound:
        raise ResourceError(
            f"sample space {spec.sides}**{spec.rolls} exceeds work bound {work_bound}"
        )
    dist = pmf(spec)
    weighted = sum(i * f for i, f in enumerate(dist.frequencies, 1))
    return Fraction(weighted, size)
