"""Communication layer: graph construction and the symbol-corrupting channel.

Graphs are undirected, simple, and static for the lifetime of a run. Each
step every agent broadcasts its previous strategy to all neighbours; each
directed edge independently corrupts the symbol with probability p_err,
replacing it by one of the two other strategies with equal chance.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from .params import STRATEGY_VALUES

# Replacement lookup for a corrupted symbol: row index = true symbol + 1,
# column = coin flip; rows list the two other symbols in ascending order.
_CORRUPTION_LUT = np.array(
    [
        [0, 1],    # true -1
        [-1, 1],   # true  0
        [-1, 0],   # true +1
    ],
    dtype=np.int8,
)


class CommGraph:
    """Undirected simple graph over agent ids 0..N-1, immutable once built.

    Adjacency lists are sorted; directed-edge arrays (receiver-major,
    sender-ascending) are precomputed because the channel draws one
    corruption decision per directed edge per step in exactly that order.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        seen: set[tuple[int, int]] = set()
        neighbors: list[set[int]] = [set() for _ in range(n)]
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for N={n}")
            if i == j:
                raise ValueError(f"self-loop at node {i}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            neighbors[i].add(j)
            neighbors[j].add(i)
        for i, nbrs in enumerate(neighbors):
            if not nbrs:
                raise ValueError(f"node {i} has degree 0")
        self.n = n
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(nbrs)) for nbrs in neighbors)
        self.degrees = np.array([len(nbrs) for nbrs in self.adjacency], dtype=np.int64)
        self.receivers = np.repeat(np.arange(n, dtype=np.int64), self.degrees)
        self.senders = np.concatenate([np.array(nbrs, dtype=np.int64) for nbrs in self.adjacency])

    @property
    def edge_count(self) -> int:
        return int(self.degrees.sum()) // 2

    @property
    def directed_count(self) -> int:
        return int(self.degrees.sum())

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self.adjacency[i]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Undirected edges as (i, j) with i < j, in sorted order."""
        for i, nbrs in enumerate(self.adjacency):
            for j in nbrs:
                if i < j:
                    yield (i, j)

    def write_edge_list(self, path) -> None:
        """One '<i> <j>' pair per line, 0-indexed."""
        with open(path, "w") as fh:
            for i, j in self.edges():
                fh.write(f"{i} {j}\n")


def build_ring(n: int) -> CommGraph:
    """Cycle graph: node i adjacent to (i-1) mod n and (i+1) mod n."""
    if n < 3:
        raise ValueError(f"ring needs N >= 3, got {n}")
    return CommGraph(n, ((i, (i + 1) % n) for i in range(n)))


def build_watts_strogatz(n: int, k: int, beta: float, rng: np.random.Generator) -> CommGraph:
    """Rewired ring lattice with mean degree exactly ``k``.

    Starts from the lattice where node i links to its k/2 nearest neighbours
    on each side. Each clockwise lattice edge (i, i+lane) is visited once
    and, with probability beta, its far endpoint is redrawn uniformly among
    nodes creating neither a self-loop nor a duplicate edge; the rewire is
    skipped if no valid target exists. Edge count stays n*k/2.
    """
    if k <= 0 or k % 2 != 0:
        raise ValueError(f"ws_K must be a positive even integer, got {k}")
    if k >= n:
        raise ValueError(f"ws_K must be < N, got K={k}, N={n}")
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"ws_beta must be in [0, 1], got {beta}")

    neighbors: list[set[int]] = [set() for _ in range(n)]
    for lane in range(1, k // 2 + 1):
        for i in range(n):
            j = (i + lane) % n
            neighbors[i].add(j)
            neighbors[j].add(i)

    for lane in range(1, k // 2 + 1):
        for i in range(n):
            if rng.random() >= beta:
                continue
            j = (i + lane) % n
            forbidden = neighbors[i] | {i}
            candidates = [w for w in range(n) if w not in forbidden]
            if not candidates:
                continue
            w = candidates[int(rng.integers(len(candidates)))]
            neighbors[i].discard(j)
            neighbors[j].discard(i)
            neighbors[i].add(w)
            neighbors[w].add(i)

    return CommGraph(n, ((i, j) for i in range(n) for j in neighbors[i] if i < j))


def build_barabasi_albert(n: int, m: int, rng: np.random.Generator) -> CommGraph:
    """Preferential-attachment graph with minimum degree ``m``.

    Seeded with a complete graph on m+1 nodes; each later node attaches to
    m distinct existing nodes drawn proportionally to current degree,
    without replacement. Final edge count is C(m+1, 2) + m*(n-m-1).
    """
    if m < 1:
        raise ValueError(f"ba_m must be >= 1, got {m}")
    if m >= n:
        raise ValueError(f"ba_m must be < N, got m={m}, N={n}")

    edges: list[tuple[int, int]] = [(i, j) for i in range(m + 1) for j in range(i + 1, m + 1)]
    # One entry per unit of degree; sampling an index uniformly is
    # degree-proportional sampling of the node.
    repeated: list[int] = [node for edge in edges for node in edge]
    for v in range(m + 1, n):
        targets: set[int] = set()
        while len(targets) < m:
            targets.add(repeated[int(rng.integers(len(repeated)))])
        for t in sorted(targets):
            edges.append((t, v))
            repeated.append(t)
            repeated.append(v)
    return CommGraph(n, edges)


class Inbox:
    """All messages of one broadcast round.

    Stores the directed-edge arrays plus the (possibly corrupted) symbols,
    in receiver-major order matching the graph's channel draw order.
    """

    def __init__(self, n: int, receivers: np.ndarray, senders: np.ndarray, symbols: np.ndarray):
        self.n = n
        self.receivers = receivers
        self.senders = senders
        self.symbols = symbols

    def messages(self, i: int) -> list[tuple[int, int]]:
        """(sender, received symbol) pairs for receiver ``i``."""
        mask = self.receivers == i
        return list(zip(self.senders[mask].tolist(), self.symbols[mask].tolist()))

    def sums(self) -> np.ndarray:
        """Per-receiver sum of received symbols, the decision rule's input."""
        acc = np.bincount(self.receivers, weights=self.symbols, minlength=self.n)
        return acc.astype(np.int64)

    def coop_seen(self) -> np.ndarray:
        """Per-receiver flag: did any received symbol show cooperation."""
        acc = np.bincount(self.receivers, weights=(self.symbols == -1), minlength=self.n)
        return acc > 0


def transmit(true_state: int, p_err: float, rng: np.random.Generator) -> int:
    """Send one strategy symbol through the noisy channel.

    With probability 1-p_err the symbol arrives intact; otherwise each of
    the two other strategies is received with probability 1/2.
    """
    if true_state not in STRATEGY_VALUES:
        raise ValueError(f"not a strategy symbol: {true_state!r}")
    if not 0.0 <= p_err <= 1.0:
        raise ValueError(f"p_err must be in [0, 1], got {p_err}")
    if rng.random() >= p_err:
        return int(true_state)
    others = _CORRUPTION_LUT[true_state + 1]
    return int(others[0] if rng.random() < 0.5 else others[1])


def corrupt_symbols(symbols: np.ndarray, p_err: float, rng: np.random.Generator) -> np.ndarray:
    """Vectorised channel: one independent corruption decision per entry.

    Consumes exactly two uniform draws per symbol (error event, then
    replacement coin) regardless of p_err, keeping the stream schedule
    fixed.
    """
    symbols = np.asarray(symbols, dtype=np.int8)
    corrupted = rng.random(symbols.shape[0]) < p_err
    coin = (rng.random(symbols.shape[0]) >= 0.5).astype(np.int64)
    out = symbols.copy()
    if corrupted.any():
        out[corrupted] = _CORRUPTION_LUT[symbols[corrupted] + 1, coin[corrupted]]
    return out


def broadcast(
    states: Sequence[int] | np.ndarray,
    graph: CommGraph,
    p_err: float,
    rng: np.random.Generator,
) -> Inbox:
    """Deliver every agent's state over every directed edge, with noise.

    Each direction of an undirected edge corrupts independently. Edges are
    processed in receiver-major sorted order so the random stream schedule
    is reproducible.
    """
    states = np.asarray(states, dtype=np.int8)
    if states.shape != (graph.n,):
        raise ValueError(f"expected {graph.n} states, got shape {states.shape}")
    sent = states[graph.senders]
    received = corrupt_symbols(sent, p_err, rng)
    return Inbox(graph.n, graph.receivers, graph.senders, received)
