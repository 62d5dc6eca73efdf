"""Exact and simulated statistics for keep-highest / keep-lowest dice rolls."""

from .asymptotics import (
    ConvergenceRow,
    convergence_table,
    gain_loss_limit,
    limit_ratio,
    relative_gain,
    relative_loss,
)
from .errors import DegenerateExperimentWarning, DomainError, ResourceError
from .exact import (
    ExperimentSpec,
    Mode,
    OutcomePmf,
    expected_value,
    expected_value_via_pmf,
    frequency,
    frequency_advantage_binomial,
    frequency_advantage_closed,
    frequency_disadvantage_binomial,
    frequency_disadvantage_closed,
    pmf,
)
from .faulhaber import BernoulliTable, bernoulli_table, faulhaber_sum, naive_power_sum
from .montecarlo import SimulationResult, empirical_pmf_distance, simulate

__version__ = "0.1.0"
