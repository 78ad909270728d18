"""Summary statistics over a finished run.

Time averages are finite-T estimates of the model's long-run quantities;
``burn_in`` drops the leading frames (the transient) before averaging.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import RunResult
from .params import Strategy, ValidatedParams


@dataclass(frozen=True)
class MetricsReport:
    """Headline metrics of one run."""

    c_avg: float        # spatial-temporal fraction of cooperating agents
    P_util: float       # delivered power over the theoretical maximum N*P_typ/4
    gini: float         # inequality of time-averaged per-agent power
    a_avg_mean: float   # time mean of the average resistors per agent
    P_i_avg: np.ndarray  # per-agent time-averaged power [watt]


def _retained(frames: np.ndarray, burn_in: int) -> np.ndarray:
    if burn_in < 0:
        raise ValueError(f"burn_in must be non-negative, got {burn_in}")
    if burn_in >= frames.shape[0]:
        raise ValueError(f"burn_in ({burn_in}) must be below the frame count ({frames.shape[0]})")
    return frames[burn_in:]


def avg_cooperation(strategies: np.ndarray, burn_in: int = 0) -> float:
    """Mean over retained frames of (cooperator count)/N."""
    kept = _retained(np.asarray(strategies), burn_in)
    return float((kept == int(Strategy.COOPERATE)).mean())


def time_avg_power(powers: np.ndarray, burn_in: int = 0) -> np.ndarray:
    """Per-agent arithmetic mean power over retained frames."""
    return _retained(np.asarray(powers, dtype=np.float64), burn_in).mean(axis=0)


def power_utilisation(p_i_avg: np.ndarray, params: ValidatedParams) -> float:
    """Fraction of the theoretical optimum the system actually delivered.

    4 * sum(P_i_avg) / (N * P_typ); exactly 1 when every agent sits at
    a_i = mu forever. Invariant under the sqrt(N) voltage scaling.
    """
    return float(4.0 * np.sum(p_i_avg) / (params.N * params.P_typ))


def gini_index(values: np.ndarray) -> float:
    """Gini index of a non-negative vector; 0 is perfect equality.

    Ascending sort, then G = (2/n) * sum(i * x_i) / sum(x_i) - (n+1)/n with
    1-based ranks. Requires at least one strictly positive value.
    """
    x = np.sort(np.asarray(values, dtype=np.float64))
    if x.size == 0 or np.any(x < 0):
        raise ValueError("gini_index needs a non-empty, non-negative vector")
    total = x.sum()
    if total <= 0:
        raise ValueError("gini_index needs at least one strictly positive value")
    n = x.size
    ranks = np.arange(1, n + 1)
    return float(2.0 / n * np.sum(ranks * x) / total - (n + 1) / n)


def summarize(result: RunResult, burn_in: int | None = None) -> MetricsReport:
    """All headline metrics of a run; burn_in defaults to the run's own."""
    if burn_in is None:
        burn_in = result.params.burn_in
    p_i_avg = time_avg_power(result.P, burn_in)
    return MetricsReport(
        c_avg=avg_cooperation(result.strategies, burn_in),
        P_util=power_utilisation(p_i_avg, result.params),
        gini=gini_index(p_i_avg),
        a_avg_mean=float(_retained(result.a_avg, burn_in).mean()),
        P_i_avg=p_i_avg,
    )
