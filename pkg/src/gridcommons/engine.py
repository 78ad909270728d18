"""Synchronous simulation loop binding the circuit, channel and decision layers.

Each step runs five phases in lock-step for all agents:

1. broadcast last strategies through the noisy channel;
2. every agent decides from (last gain, inbox, gene) -- see
   :mod:`gridcommons.agents` for the four decision branches;
3. all actions apply simultaneously, giving the new resistor counts;
4. powers follow from the circuit closed form;
5. gains (relative power change) are stored for the next decision.

One bookkeeping rule lives here rather than in the decision module: an
agent that sticks to Cooperate by gain while already at the one-resistor
floor physically does nothing, and its recorded state for that step is
Ignore (the action classification follows what happened, and a satisfied
floor agent stops signalling cooperation). Majority-compelled cooperation
at the floor still records Cooperate, which is what locks solidarity
clusters together.

All randomness derives from the master seed through fixed substreams, so a
run is a pure function of its parameters. Within a step the stream schedule
is fixed: two channel draws per directed edge in receiver-major order, then
two decision draws per agent in id order (drawn eagerly for every agent).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import circuit
from .agents import decide_all, init_genes
from .network import CommGraph, broadcast, build_barabasi_albert, build_ring, build_watts_strogatz
from .params import Strategy, SystemParams, Topology, ValidatedParams, validate_params

# Substream ids hung off the master seed; changing these breaks replay of
# existing seeds.
STREAM_GRAPH = 0
STREAM_GENES = 1
STREAM_INIT = 2
STREAM_DYNAMICS = 3

_MAX_INIT_REDRAWS = 1000


class InitError(RuntimeError):
    """Initial resistor draw cannot satisfy n < N*mu (e.g. mu <= 1)."""


def substream(seed: int, stream: int) -> np.random.Generator:
    """Independent generator for one named substream of a master seed."""
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(stream,)))


@dataclass
class SimState:
    """Vectorised mutable agent state between steps."""

    a: np.ndarray           # int64, >= 1
    strategies: np.ndarray  # int8 in {-1, 0, +1}
    last_power: np.ndarray  # float64, > 0
    last_gain: np.ndarray   # float64, -inf before the first gain exists
    genes: np.ndarray       # float64 in [0, 1), fixed per run


@dataclass(frozen=True)
class StepFrame:
    """Snapshot of one time step."""

    t: int
    strategies: np.ndarray
    a: np.ndarray
    P: np.ndarray
    n: int
    a_avg: float


@dataclass
class RunResult:
    """Full trace of one run: stacked per-frame arrays plus run inputs.

    Row t of each array is the state after step t; row 0 is the initial
    condition, so there are steps+1 rows.
    """

    params: ValidatedParams
    genes: np.ndarray
    graph: CommGraph
    strategies: np.ndarray  # (steps+1, N) int8
    a: np.ndarray           # (steps+1, N) int64
    P: np.ndarray           # (steps+1, N) float64
    n: np.ndarray           # (steps+1,) int64
    a_avg: np.ndarray       # (steps+1,) float64

    def frame(self, t: int) -> StepFrame:
        return StepFrame(
            t=t,
            strategies=self.strategies[t],
            a=self.a[t],
            P=self.P[t],
            n=int(self.n[t]),
            a_avg=float(self.a_avg[t]),
        )

    @property
    def frames(self) -> Iterator[StepFrame]:
        return (self.frame(t) for t in range(self.strategies.shape[0]))


def build_graph(params: ValidatedParams, rng: np.random.Generator) -> CommGraph:
    spec = params.topology
    if spec.kind is Topology.RING:
        return build_ring(params.N)
    if spec.kind is Topology.WATTS_STROGATZ:
        return build_watts_strogatz(params.N, spec.ws_K, spec.ws_beta, rng)
    if spec.kind is Topology.BARABASI_ALBERT:
        return build_barabasi_albert(params.N, spec.ba_m, rng)
    raise ValueError(f"unknown topology kind {spec.kind!r}")


def init_state(params: ValidatedParams, rng: np.random.Generator, genes: np.ndarray) -> SimState:
    """Draw the initial resistor counts and compute the t=0 powers.

    Each a_i is uniform on the integers [1, floor(mu)]; the whole vector is
    redrawn while n >= N*mu, so the system always starts with equivalent
    resistance above the optimum. Aborts after 1000 redraws (unsatisfiable
    when mu <= 1).
    """
    high = int(np.floor(params.mu))
    if high < 1:
        raise InitError(f"mu = {params.mu:g} < 1: no valid initial resistor count exists")
    for _ in range(_MAX_INIT_REDRAWS):
        a = rng.integers(1, high + 1, size=params.N, dtype=np.int64)
        if a.sum() < params.N * params.mu:
            break
    else:
        raise InitError(
            f"could not draw an initial state with n < N*mu after {_MAX_INIT_REDRAWS} attempts "
            f"(mu = {params.mu:g})"
        )
    powers = circuit.power_vector(a, params)
    return SimState(
        a=a,
        strategies=np.full(params.N, np.int8(Strategy.IGNORE), dtype=np.int8),
        last_power=powers,
        last_gain=np.full(params.N, -np.inf),
        genes=genes,
    )


def step(state: SimState, graph: CommGraph, params: ValidatedParams, rng: np.random.Generator, t: int) -> StepFrame:
    """Advance the system by one synchronous round, mutating ``state``."""
    inbox = broadcast(state.strategies, graph, params.p_err, rng)
    xi1 = rng.random(params.N)
    xi2 = rng.random(params.N)
    decisions, stuck = decide_all(
        state.strategies, state.last_gain, state.genes,
        inbox.sums(), inbox.coop_seen(), params.lambda_min, xi1, xi2,
    )
    # The strategy value doubles as the resistor delta; removal clamps at 1.
    a_new = np.maximum(state.a + decisions, 1)
    recorded = decisions.copy()
    # Stick-by-gain cooperation at the floor is a physical no-op: record it
    # as doing nothing. Majority/keep cooperation at the floor stays -1.
    recorded[stuck & (decisions == np.int8(Strategy.COOPERATE)) & (state.a == 1)] = np.int8(Strategy.IGNORE)
    powers = circuit.power_vector(a_new, params)
    state.last_gain = powers / state.last_power - 1.0
    state.last_power = powers
    state.a = a_new
    state.strategies = recorded
    n = int(a_new.sum())
    return StepFrame(t=t, strategies=recorded, a=a_new, P=powers, n=n, a_avg=n / params.N)


def run(params: SystemParams | ValidatedParams) -> RunResult:
    """Execute a full run: graph, genes and initial state from the seed, then T steps.

    Bitwise reproducible: repeated invocations with equal params return
    identical traces.
    """
    vp = params if isinstance(params, ValidatedParams) else validate_params(params)
    graph = build_graph(vp, substream(vp.seed, STREAM_GRAPH))
    genes = init_genes(vp.N, substream(vp.seed, STREAM_GENES))
    state = init_state(vp, substream(vp.seed, STREAM_INIT), genes)
    dyn = substream(vp.seed, STREAM_DYNAMICS)

    frames = vp.steps + 1
    strategies = np.empty((frames, vp.N), dtype=np.int8)
    a = np.empty((frames, vp.N), dtype=np.int64)
    powers = np.empty((frames, vp.N), dtype=np.float64)
    n = np.empty(frames, dtype=np.int64)
    a_avg = np.empty(frames, dtype=np.float64)

    strategies[0] = state.strategies
    a[0] = state.a
    powers[0] = state.last_power
    n[0] = state.a.sum()
    a_avg[0] = n[0] / vp.N

    for t in range(1, frames):
        frame = step(state, graph, vp, dyn, t)
        strategies[t] = frame.strategies
        a[t] = frame.a
        powers[t] = frame.P
        n[t] = frame.n
        a_avg[t] = frame.a_avg

    return RunResult(
        params=vp, genes=genes, graph=graph,
        strategies=strategies, a=a, P=powers, n=n, a_avg=a_avg,
    )
