"""Seeded Monte Carlo simulation of single, keep-highest and keep-lowest rolls.

Random bits come from Philox4x64-10 (numpy's ``Philox``), a counter-based
generator with published known-answer vectors. The 64-bit seed is the
Philox key. Trials are grouped into fixed blocks of ``BLOCK_TRIALS``; block
``b`` reads the counter stream starting at ``(0, 0, b, 0)``. A block's draws
therefore depend only on ``(seed, b)``, and the result does not depend on
how many worker threads process the blocks.

Faces are drawn by rejection: mask each 64-bit word down to the smallest
power of two covering ``s`` and discard values >= ``s``. There is no modulo
bias.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .exact import ExperimentSpec, Mode, OutcomePmf

__all__ = [
    "BLOCK_TRIALS",
    "SimulationResult",
    "block_generator",
    "uniform_faces",
    "simulate",
    "empirical_pmf_distance",
]

BLOCK_TRIALS = 1 << 16
_U64 = 1 << 64


@dataclass(frozen=True)
class SimulationResult:
    spec: ExperimentSpec
    trials: int
    seed: int
    counts: tuple[int, ...]
    empirical_mean: float = field(init=False)
    standard_error: float = field(init=False)

    def __post_init__(self) -> None:
        if len(self.counts) != self.spec.sides:
            raise DomainError(f"expected {self.spec.sides} counts, got {len(self.counts)}")
        if sum(self.counts) != self.trials:
            raise DomainError("counts do not sum to trials")
        faces = np.arange(1, self.spec.sides + 1, dtype=np.float64)
        c = np.asarray(self.counts, dtype=np.float64)
        n = self.trials
        mean = float(faces @ c) / n
        if n > 1:
            var = float(((faces - mean) ** 2) @ c) / (n - 1)
            se = math.sqrt(var / n)
        else:
            se = math.nan
        object.__setattr__(self, "empirical_mean", mean)
        object.__setattr__(self, "standard_error", se)


def block_generator(seed: int, block: int) -> np.random.Philox:
    """Philox stream for trial block ``block`` under ``seed``."""
    if not 0 <= seed < _U64:
        raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed}")
    # numpy bumps the counter before each output, so start one step back
    start = ((block << 128) - 1) % (1 << 256)
    return np.random.Philox(counter=start, key=seed)


def uniform_faces(bitgen: np.random.Philox, sides: int, size: int) -> np.ndarray:
    """``size`` unbiased draws from 1..sides, consuming ``bitgen`` sequentially."""
    mask = np.uint64((1 << (sides - 1).bit_length()) - 1)
    out = np.empty(size, dtype=np.int64)
    filled = 0
    while filled < size:
        need = size - filled
        # acceptance rate is > 1/2, so 2*need + slack usually finishes in one pass
        raw = bitgen.random_raw(2 * need + 64) & mask
        accepted = raw[raw < sides][:need]
        out[filled : filled + accepted.size] = accepted
        filled += accepted.size
    return out + 1


def _run_block(spec: ExperimentSpec, seed: int, block: int, n: int) -> np.ndarray:
    bitgen = block_generator(seed, block)
    draws = uniform_faces(bitgen, spec.sides, n * spec.rolls).reshape(n, spec.rolls)
    if spec.mode is Mode.DISADVANTAGE:
        kept = draws.min(axis=1)
    else:
        kept = draws.max(axis=1)
    return np.bincount(kept, minlength=spec.sides + 1)[1:]


def simulate(
    spec: ExperimentSpec, trials: int, seed: int, *, workers: int = 1
) -> SimulationResult:
    """Roll ``spec`` ``trials`` times; counts are reproducible for fixed ``(spec, trials, seed)``.

    ``workers`` only sets thread-level parallelism and never changes the
    result.
    """
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    if workers < 1:
        raise DomainError(f"workers must be >= 1, got {workers}")
    nblocks = -(-trials // BLOCK_TRIALS)
    sizes = [BLOCK_TRIALS] * (nblocks - 1) + [trials - BLOCK_TRIALS * (nblocks - 1)]
    jobs = list(enumerate(sizes))
    if workers == 1 or nblocks == 1:
        parts = [_run_block(spec, seed, b, n) for b, n in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda job: _run_block(spec, seed, *job), jobs))
    counts = np.sum(parts, axis=0)
    return SimulationResult(spec, trials, seed, tuple(int(c) for c in counts))


def empirical_pmf_distance(result: SimulationResult, exact: OutcomePmf) -> float:
    """Total-variation distance between observed frequencies and ``exact``."""
    if result.spec != exact.spec:
        raise DomainError("simulation and exact PMF describe different experiments")
    n = result.trials
    # exact in rationals, rounded once at the end
    dist = sum(
        (abs(Fraction(c, n) - p) for c, p in zip(result.counts, exact.probabilities)),
        Fraction(0),
    )
    return float(dist / 2)
