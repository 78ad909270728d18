"""Shared domain vocabulary: run parameters, validation, derived constants.

Units are raw floats with documented meaning (ohms, volts, watts); there is
no unit library. All other modules consume :class:`ValidatedParams`, never a
bare :class:`SystemParams`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class ValidationError(ValueError):
    """A parameter violates one of its documented invariants."""


class Topology(enum.Enum):
    """Communication graph families supported by the simulator."""

    RING = "ring"
    WATTS_STROGATZ = "ws"
    BARABASI_ALBERT = "ba"


class Strategy(enum.IntEnum):
    """Agent behaviour classes.

    The integer encoding (-1 cooperate, 0 ignore, +1 defect) is part of the
    external contract: raster files and inbox sums rely on it, and the value
    doubles as the resistor-count delta of the action.
    """

    COOPERATE = -1
    IGNORE = 0
    DEFECT = 1


STRATEGY_VALUES = (-1, 0, 1)


@dataclass(frozen=True)
class TopologySpec:
    """Which graph to build and its family-specific knobs.

    ws_K / ws_beta apply only to Watts-Strogatz, ba_m only to
    Barabasi-Albert; irrelevant fields may be left as None.
    """

    kind: Topology
    ws_K: int | None = None
    ws_beta: float | None = None
    ba_m: int | None = None


@dataclass(frozen=True)
class SystemParams:
    """All constants of one run, exactly as configured (voltage unscaled).

    N       agent count
    R_V     source resistance [ohm]
    R_0     per-unit load constant [ohm]; every load resistor is R = N*R_0
    V       base source voltage [volt] before the sqrt(N) scaling
    lambda_min  minimum relative power gain for an agent to repeat its move
    p_err   per-directed-edge, per-step symbol corruption probability
    steps   number of simulated steps T (the trace has T+1 frames)
    burn_in frames excluded from summary metrics, 0 <= burn_in < steps
    seed    64-bit unsigned master seed; all randomness derives from it
    """

    N: int
    R_V: float
    R_0: float
    V: float
    lambda_min: float
    p_err: float
    topology: TopologySpec
    steps: int
    burn_in: int = 0
    seed: int = 0


@dataclass(frozen=True)
class ValidatedParams:
    """A SystemParams that passed validation, plus derived circuit constants.

    mu       R_0 / R_V; also the power-optimal average resistors per agent
    R_total  N * R_0, the resistance of every individual load resistor [ohm]
    V_scaled V * sqrt(N), the voltage actually applied to the circuit [volt]
    P_typ    V**2 / R_V (unscaled V); the per-agent optimum power is P_typ/4
    """

    N: int
    R_V: float
    R_0: float
    V: float
    lambda_min: float
    p_err: float
    topology: TopologySpec
    steps: int
    burn_in: int
    seed: int
    mu: float
    R_total: float
    V_scaled: float
    P_typ: float


def _require(cond: bool, field: str, message: str) -> None:
    if not cond:
        raise ValidationError(f"{field}: {message}")


def _check_topology(spec: TopologySpec, N: int) -> None:
    if not isinstance(spec.kind, Topology):
        raise ValidationError(f"topology: unknown kind {spec.kind!r}")
    if spec.kind is Topology.RING:
        _require(N >= 3, "N", f"ring topology needs N >= 3, got {N}")
    elif spec.kind is Topology.WATTS_STROGATZ:
        _require(spec.ws_K is not None, "ws_K", "required for topology ws")
        _require(spec.ws_beta is not None, "ws_beta", "required for topology ws")
        K = spec.ws_K
        _require(isinstance(K, int) and K > 0, "ws_K", f"must be a positive integer, got {K!r}")
        _require(K % 2 == 0, "ws_K", f"must be even, got {K}")
        _require(K < N, "ws_K", f"must be < N ({N}), got {K}")
        _require(
            isinstance(spec.ws_beta, (int, float)) and 0.0 <= spec.ws_beta <= 1.0,
            "ws_beta",
            f"must be in [0, 1], got {spec.ws_beta!r}",
        )
    elif spec.kind is Topology.BARABASI_ALBERT:
        _require(spec.ba_m is not None, "ba_m", "required for topology ba")
        m = spec.ba_m
        _require(isinstance(m, int) and m >= 1, "ba_m", f"must be a positive integer, got {m!r}")
        _require(m < N, "ba_m", f"must be < N ({N}), got {m}")


def validate_params(params: SystemParams) -> ValidatedParams:
    """Check every invariant of ``params`` and attach derived constants.

    Pure: same input, same output. Raises :class:`ValidationError` naming
    the offending field.
    """
    _require(isinstance(params.N, int) and params.N >= 2, "N", f"must be an integer >= 2, got {params.N!r}")
    for field in ("R_V", "R_0", "V"):
        value = getattr(params, field)
        _require(
            isinstance(value, (int, float)) and math.isfinite(value) and value > 0,
            field,
            f"must be a positive finite number, got {value!r}",
        )
    _require(
        isinstance(params.lambda_min, (int, float)) and math.isfinite(params.lambda_min),
        "lambda_min",
        f"must be a finite number, got {params.lambda_min!r}",
    )
    _require(
        isinstance(params.p_err, (int, float)) and 0.0 <= params.p_err <= 1.0,
        "p_err",
        f"must be in [0, 1], got {params.p_err!r}",
    )
    _require(isinstance(params.steps, int) and params.steps >= 1, "steps", f"must be a positive integer, got {params.steps!r}")
    _require(
        isinstance(params.burn_in, int) and 0 <= params.burn_in < params.steps,
        "burn_in",
        f"must be an integer in [0, steps), got {params.burn_in!r}",
    )
    _require(
        isinstance(params.seed, int) and 0 <= params.seed < 2**64,
        "seed",
        f"must be a 64-bit unsigned integer, got {params.seed!r}",
    )
    _check_topology(params.topology, params.N)

    mu = params.R_0 / params.R_V
    _require(math.isfinite(mu) and mu > 0, "R_0", "derived mu = R_0/R_V must be finite and positive")

    return ValidatedParams(
        N=params.N,
        R_V=float(params.R_V),
        R_0=float(params.R_0),
        V=float(params.V),
        lambda_min=float(params.lambda_min),
        p_err=float(params.p_err),
        topology=params.topology,
        steps=params.steps,
        burn_in=params.burn_in,
        seed=params.seed,
        mu=mu,
        R_total=params.N * params.R_0,
        V_scaled=float(params.V) * math.sqrt(params.N),
        P_typ=float(params.V) ** 2 / params.R_V,
    )
