"""File writers for the run artifacts.

Schemas are fixed and consumed blind by external tooling:

raster.txt           one line per frame, N space-separated ints in {-1,0,1}
summary.csv          t, n, a_avg, P_all, cooperator_count, defector_count, ignore_count
metrics.csv          seed, N, topology, lambda_min, p_err, c_avg, P_util, gini, a_avg_mean
config_resolved.txt  flat key = value copy of the inputs plus derived constants
graph.txt            one "i j" edge per line, 0-indexed

All numbers are written with full round-trip precision and no timestamps,
so reruns of the same config are byte-identical.
"""

from __future__ import annotations

import csv

import numpy as np

from .engine import RunResult
from .metrics import MetricsReport
from .params import Strategy, Topology, ValidatedParams

METRICS_COLUMNS = ("seed", "N", "topology", "lambda_min", "p_err", "c_avg", "P_util", "gini", "a_avg_mean")
SUMMARY_COLUMNS = ("t", "n", "a_avg", "P_all", "cooperator_count", "defector_count", "ignore_count")


def write_raster(path, strategies: np.ndarray) -> None:
    with open(path, "w") as fh:
        for row in np.asarray(strategies):
            fh.write(" ".join(str(int(s)) for s in row))
            fh.write("\n")


def write_summary(path, result: RunResult) -> None:
    p_all = result.P.sum(axis=1)
    coop = (result.strategies == int(Strategy.COOPERATE)).sum(axis=1)
    defect = (result.strategies == int(Strategy.DEFECT)).sum(axis=1)
    ignore = (result.strategies == int(Strategy.IGNORE)).sum(axis=1)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SUMMARY_COLUMNS)
        for t in range(result.strategies.shape[0]):
            writer.writerow([
                t, int(result.n[t]), repr(float(result.a_avg[t])), repr(float(p_all[t])),
                int(coop[t]), int(defect[t]), int(ignore[t]),
            ])


def write_metrics(path, params: ValidatedParams, report: MetricsReport) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(METRICS_COLUMNS)
        writer.writerow([
            params.seed, params.N, params.topology.kind.value,
            repr(params.lambda_min), repr(params.p_err),
            repr(report.c_avg), repr(report.P_util), repr(report.gini), repr(report.a_avg_mean),
        ])


def write_resolved_config(path, params: ValidatedParams) -> None:
    """Provenance copy of the run inputs plus every derived constant."""
    lines = [
        ("N", params.N),
        ("R_V_ohm", repr(params.R_V)),
        ("R0_ohm", repr(params.R_0)),
        ("V_volt", repr(params.V)),
        ("lambda_min", repr(params.lambda_min)),
        ("p_err", repr(params.p_err)),
        ("topology", params.topology.kind.value),
    ]
    if params.topology.kind is Topology.WATTS_STROGATZ:
        lines += [("ws_K", params.topology.ws_K), ("ws_beta", repr(float(params.topology.ws_beta)))]
    if params.topology.kind is Topology.BARABASI_ALBERT:
        lines += [("ba_m", params.topology.ba_m)]
    lines += [
        ("steps", params.steps),
        ("burn_in", params.burn_in),
        ("seed", params.seed),
        ("mu", repr(params.mu)),
        ("R_total_ohm", repr(params.R_total)),
        ("V_scaled_volt", repr(params.V_scaled)),
        ("P_typ_watt", repr(params.P_typ)),
    ]
    with open(path, "w") as fh:
        for key, value in lines:
            fh.write(f"{key} = {value}\n")
