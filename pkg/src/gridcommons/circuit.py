"""Circuit math for one voltage source feeding banks of identical parallel resistors.

Every load resistor has resistance R = N*R_0. With n active resistors the
delivered per-agent power reduces to the closed form

    P_i = P_typ * a_i * mu / (a_avg + mu)**2,   a_avg = n/N, mu = R_0/R_V

with P_typ = V**2/R_V (unscaled V; the sqrt(N) source scaling cancels).
Total power peaks at a_avg = mu with value N*P_typ/4.
"""

from __future__ import annotations

import math

import numpy as np

from .params import ValidatedParams


def power_per_agent(a_i: int, n: int, params: ValidatedParams) -> float:
    """Power one agent with ``a_i`` active resistors draws when the system has ``n``.

    Requires 1 <= a_i <= n and n >= N; strictly positive result.
    """
    if a_i < 1:
        raise ValueError(f"a_i must be >= 1, got {a_i}")
    if n < a_i:
        raise ValueError(f"n ({n}) must be >= a_i ({a_i})")
    if n < params.N:
        raise ValueError(f"n ({n}) must be >= N ({params.N}): every agent keeps at least one resistor")
    a_avg = n / params.N
    return params.P_typ * a_i * params.mu / (a_avg + params.mu) ** 2


def power_vector(a: np.ndarray, params: ValidatedParams) -> np.ndarray:
    """Per-agent power for a full vector of active-resistor counts."""
    a = np.asarray(a)
    if a.shape != (params.N,):
        raise ValueError(f"expected a vector of length N={params.N}, got shape {a.shape}")
    if np.any(a < 1):
        raise ValueError("every agent must keep at least one active resistor")
    a_avg = a.sum() / params.N
    return params.P_typ * params.mu * a.astype(np.float64) / (a_avg + params.mu) ** 2


def total_power(a: np.ndarray, params: ValidatedParams) -> float:
    """Total delivered power; equals P_typ*mu*N*a_avg/(a_avg+mu)**2."""
    return float(power_vector(a, params).sum())


def exact_gain(p_now, p_prev):
    """Relative power change (p_now - p_prev) / p_prev.

    Accepts scalars or arrays; zero iff p_now == p_prev.
    """
    if np.any(np.asarray(p_prev) <= 0):
        raise ValueError("p_prev must be strictly positive")
    return p_now / p_prev - 1.0


def approx_gain(
    a_i: int,
    delta_a_i: int,
    delta_r_i: int,
    a_avg: float,
    params: ValidatedParams,
) -> float:
    """First-order gain estimate from the total derivative of the power law.

        gain ~ delta_a_i/a_i - (2/N) * (delta_r_i + delta_a_i) / (a_avg + mu)

    ``a_i`` and ``a_avg`` are the post-change values. Kept for analysis and
    tests; the simulation itself uses :func:`exact_gain`.
    """
    if a_i < 1:
        raise ValueError(f"a_i must be >= 1, got {a_i}")
    return delta_a_i / a_i - (2.0 / params.N) * (delta_r_i + delta_a_i) / (a_avg + params.mu)


def tipping_point(lambda_min: float) -> float:
    """Resistor count past which a lone agent's gain from adding drops below the threshold.

    In the large-system limit the own-gain of one added resistor is 1/a_i,
    so the threshold is crossed at 1/lambda_min.
    """
    if not (lambda_min > 0 and math.isfinite(lambda_min)):
        raise ValueError(f"lambda_min must be positive and finite, got {lambda_min!r}")
    return 1.0 / lambda_min
