"""Agent decision rules: gain threshold, neighbour majority, selfishness gene.

The per-agent procedure, applied synchronously every step:

1. keep the previous strategy if its realised gain met ``lambda_min``;
2. otherwise cooperate if the received neighbour symbols sum below zero;
3. otherwise, if any received symbol shows cooperation, keep the previous
   strategy (visible cooperation without a majority compels no change);
4. otherwise (no cooperative signal at all) behave randomly: draw xi1 and
   cooperate if xi1 > gene, else draw xi2 and defect if xi2 < gene, else
   ignore.

Draws are uniform on the half-open [0, 1), which makes the gene boundaries
deterministic: gene 1 never cooperates at step 4's first draw and always
defects at its second.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import Strategy


@dataclass
class AgentRecord:
    """Mutable per-agent state for one run.

    The selfishness gene is fixed for the run's lifetime; ``a`` never drops
    below one resistor.
    """

    id: int
    a: int
    strategy: Strategy
    gene: float
    last_power: float = 0.0
    last_gain: float = float("-inf")


def init_genes(n: int, rng: np.random.Generator) -> np.ndarray:
    """N independent selfishness genes, uniform on [0, 1)."""
    return rng.random(n)


def decide(
    record: AgentRecord,
    inbox_sum: int,
    coop_seen: bool,
    lambda_min: float,
    rng: np.random.Generator,
) -> Strategy:
    """Choose the next strategy for one agent.

    ``inbox_sum`` is the sum of the neighbour symbols received in this
    step's broadcast and ``coop_seen`` whether any of them was Cooperate.
    Draws from ``rng`` lazily: only the no-cooperation branch consumes
    uniforms (one or two).
    """
    if record.last_gain >= lambda_min:
        return record.strategy
    if inbox_sum < 0:
        return Strategy.COOPERATE
    if coop_seen:
        return record.strategy
    if rng.random() > record.gene:
        return Strategy.COOPERATE
    if rng.random() < record.gene:
        return Strategy.DEFECT
    return Strategy.IGNORE


def apply_action(record: AgentRecord, decision: Strategy) -> AgentRecord:
    """Apply a decision to the resistor count, clamping removal at one.

    The strategy field takes the decision even when the removal was
    clamped: a majority-compelled agent at the floor still broadcasts
    cooperation (the engine's stick branch overrides this one case, see
    there).
    """
    if record.a < 1:
        raise ValueError(f"agent {record.id} has invalid resistor count {record.a}")
    record.a = max(record.a + int(decision), 1)
    record.strategy = Strategy(decision)
    return record


def decide_all(
    strategies: np.ndarray,
    last_gain: np.ndarray,
    genes: np.ndarray,
    inbox_sums: np.ndarray,
    coop_seen: np.ndarray,
    lambda_min: float,
    xi1: np.ndarray,
    xi2: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised :func:`decide` over all agents, as a pure function.

    ``xi1``/``xi2`` are the pre-drawn uniforms for the two random-branch
    comparisons; entries outside that branch are ignored. Used by the
    engine, which draws both arrays every step in agent-id order to keep
    the stream schedule fixed. Returns the decisions plus the stick-branch
    mask (the engine needs it for floor bookkeeping).
    """
    stick = last_gain >= lambda_min
    majority = ~stick & (inbox_sums < 0)
    keep = ~stick & ~majority & coop_seen
    random_branch = ~(stick | majority | keep)
    coop_random = random_branch & (xi1 > genes)
    defect = random_branch & ~coop_random & (xi2 < genes)

    out = np.where(stick | keep, strategies, np.int8(Strategy.IGNORE)).astype(np.int8)
    out[majority | coop_random] = np.int8(Strategy.COOPERATE)
    out[defect] = np.int8(Strategy.DEFECT)
    return out, stick
