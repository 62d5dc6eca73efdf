"""Large-``s`` behaviour: limits of E/s, relative gain and loss, convergence tables."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DomainError
from .exact import ExperimentSpec, Mode, expected_value
from .faulhaber import BernoulliTable, bernoulli_table, faulhaber_sum

__all__ = [
    "BernoulliTable",
    "ConvergenceRow",
    "bernoulli_table",
    "faulhaber_sum",
    "limit_ratio",
    "relative_gain",
    "relative_loss",
    "gain_loss_limit",
    "convergence_table",
]


@dataclass(frozen=True)
class ConvergenceRow:
    sides: int
    ratio: Fraction
    limit: Fraction
    gap: Fraction

    def __post_init__(self) -> None:
        if self.gap != self.ratio - self.limit:
            raise DomainError("gap must equal ratio - limit")


def _check_rolls(r: int) -> None:
    if r < 1:
        raise DomainError(f"rolls must be >= 1, got {r}")


def limit_ratio(mode: Mode | str, r: int) -> Fraction:
    """Limit of ``E/s`` as ``s`` grows: ``r/(r+1)`` keeping highest, ``1/(r+1)`` keeping lowest."""
    mode = Mode.parse(mode)
    _check_rolls(r)
    if mode is Mode.ADVANTAGE:
        return Fraction(r, r + 1)
    if mode is Mode.DISADVANTAGE:
        return Fraction(1, r + 1)
    raise DomainError("limit_ratio is defined for advantage and disadvantage only")


def _base_mean(s: int) -> Fraction:
    return Fraction(s + 1, 2)


def relative_gain(r: int, s: int) -> Fraction:
    """``(E[max] - E[single]) / E[single]`` for r rolls of an s-sided die."""
    base = _base_mean(s)
    high = expected_value(ExperimentSpec(s, r, Mode.ADVANTAGE))
    return (high - base) / base


def relative_loss(r: int, s: int) -> Fraction:
    """``(E[single] - E[min]) / E[single]``; equal to :func:`relative_gain` for every r, s."""
    base = _base_mean(s)
    low = expected_value(ExperimentSpec(s, r, Mode.DISADVANTAGE))
    return (base - low) / base


def gain_loss_limit(r: int) -> Fraction:
    _check_rolls(r)
    return Fraction(r - 1, r + 1)


def convergence_table(
    mode: Mode | str, r: int, sides_schedule: Iterable[int]
) -> list[ConvergenceRow]:
    """Exact ``E/s`` against its limit at each ``s`` of ``sides_schedule``.

    Single mode is accepted with limit 1/2 (``(s+1)/(2s)`` tends there), as
    an extension; :func:`limit_ratio` itself rejects it.
    """
    mode = Mode.parse(mode)
    _check_rolls(r)
    schedule = list(sides_schedule)
    if not schedule:
        raise DomainError("sides schedule is empty")
    if any(s < 2 for s in schedule):
        raise DomainError("every schedule entry must be >= 2")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise DomainError("sides schedule must be strictly increasing")
    if mode is Mode.SINGLE:
        if r != 1:
            raise DomainError(f"single mode requires rolls == 1, got {r}")
        limit = Fraction(1, 2)
    else:
        limit = limit_ratio(mode, r)
    rows = []
    for s in schedule:
        ratio = expected_value(ExperimentSpec(s, r, mode)) / s
        rows.append(ConvergenceRow(s, ratio, limit, ratio - limit))
    return rows
