"""gridcommons: a three-layer complex-system simulator.

Agents share one electrical circuit (banks of identical parallel resistors
behind a common source), exchange their last moves over a noisy
communication graph, and decide each round whether to add, remove or keep a
resistor based on realised power gain, neighbour majority and a fixed
selfishness gene.
"""

from .agents import AgentRecord, apply_action, decide, init_genes
from .circuit import approx_gain, exact_gain, power_per_agent, power_vector, tipping_point, total_power
from .engine import InitError, RunResult, StepFrame, run
from .metrics import MetricsReport, avg_cooperation, gini_index, power_utilisation, summarize, time_avg_power
from .network import CommGraph, broadcast, build_barabasi_albert, build_ring, build_watts_strogatz, transmit
from .params import (
    Strategy,
    SystemParams,
    Topology,
    TopologySpec,
    ValidatedParams,
    ValidationError,
    validate_params,
)
from .sweep import SweepAxis, SweepSpec, run_sweep

__all__ = [
    "AgentRecord", "apply_action", "decide", "init_genes",
    "approx_gain", "exact_gain", "power_per_agent", "power_vector", "tipping_point", "total_power",
    "InitError", "RunResult", "StepFrame", "run",
    "MetricsReport", "avg_cooperation", "gini_index", "power_utilisation", "summarize", "time_avg_power",
    "CommGraph", "broadcast", "build_barabasi_albert", "build_ring", "build_watts_strogatz", "transmit",
    "Strategy", "SystemParams", "Topology", "TopologySpec", "ValidatedParams", "ValidationError", "validate_params",
    "SweepAxis", "SweepSpec", "run_sweep",
]

__version__ = "0.1.0"
