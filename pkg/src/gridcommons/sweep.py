"""Parameter sweeps: run one axis over a list of values and seeds, aggregate to CSV.

Every sweep point is an independent run fully determined by its own params,
so points may execute in any order or in parallel without changing the
output: rows are sorted by (value, seed) and aggregates are computed after
all points finish.
"""

from __future__ import annotations

import csv
import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from . import metrics
from .engine import run
from .params import SystemParams, Topology, ValidationError, validate_params

SWEEP_COLUMNS = (
    "kind", "axis", "value", "seed",
    "N", "topology", "lambda_min", "p_err",
    "c_avg", "P_util", "gini", "a_avg_mean", "error",
)


class SweepAxis(enum.Enum):
    """Which config key the sweep varies; the value doubles as that key."""

    SYSTEM_SIZE = "N"
    LAMBDA_MIN = "lambda_min"
    ERROR_PROB = "p_err"
    TOPOLOGY = "topology"


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: a base parameter set, an axis, its values, seeds per value."""

    base: SystemParams
    axis: SweepAxis
    values: tuple
    seeds: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValidationError("values: must be non-empty")
        if not self.seeds:
            raise ValidationError("seeds: must be non-empty")
        # Every (value, seed) combination must be a valid parameter set.
        for value in self.values:
            for seed in self.seeds:
                validate_params(point_params(self, value, seed))


def point_params(spec: SweepSpec, value, seed: int) -> SystemParams:
    """The full parameter set of one sweep point."""
    if spec.axis is SweepAxis.TOPOLOGY:
        kind = value if isinstance(value, Topology) else Topology(value)
        topo = replace(spec.base.topology, kind=kind)
        return replace(spec.base, topology=topo, seed=seed)
    return replace(spec.base, **{spec.axis.value: value, "seed": seed})


def _value_label(value) -> str:
    if isinstance(value, Topology):
        return value.value
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _run_point(args: tuple[SystemParams, object, int]) -> dict:
    """Worker: one run plus its metrics row. Top-level so pools can pickle it."""
    params, value, seed = args
    row = {
        "kind": "run",
        "value": _value_label(value),
        "seed": seed,
        "N": params.N,
        "topology": params.topology.kind.value,
        "lambda_min": repr(float(params.lambda_min)),
        "p_err": repr(float(params.p_err)),
        "c_avg": "", "P_util": "", "gini": "", "a_avg_mean": "", "error": "",
    }
    try:
        report = metrics.summarize(run(params))
    except Exception as exc:  # recorded per point; the sweep continues
        row["error"] = f"{type(exc).__name__}: {exc}"
        return row
    row.update(
        c_avg=repr(report.c_avg),
        P_util=repr(report.P_util),
        gini=repr(report.gini),
        a_avg_mean=repr(report.a_avg_mean),
    )
    return row


def _sort_key(value):
    if isinstance(value, Topology):
        return (1, value.value)
    return (0, float(value))


def _aggregate(value, value_rows: list[dict]) -> list[dict]:
    """Per-value mean and sample standard deviation over successful runs."""
    ok = [r for r in value_rows if not r["error"]]
    out = []
    for kind in ("mean", "std"):
        row = dict(value_rows[0])
        row.update(kind=kind, seed="", error="")
        for col in ("c_avg", "P_util", "gini", "a_avg_mean"):
            if not ok:
                row[col] = ""
                continue
            xs = [float(r[col]) for r in ok]
            if kind == "mean":
                row[col] = repr(sum(xs) / len(xs))
            else:
                if len(xs) < 2:
                    row[col] = repr(0.0)
                else:
                    m = sum(xs) / len(xs)
                    row[col] = repr(math.sqrt(sum((x - m) ** 2 for x in xs) / (len(xs) - 1)))
        out.append(row)
    return out


def run_sweep(spec: SweepSpec, parallelism: int = 1) -> list[dict]:
    """Run every (value, seed) point and return ordered rows with aggregates.

    Output is independent of ``parallelism``: points are keyed by (value,
    seed), sorted afterwards, and each run derives all randomness from its
    own seed.
    """
    points = [
        (point_params(spec, value, seed), value, seed)
        for value in sorted(spec.values, key=_sort_key)
        for seed in sorted(spec.seeds)
    ]
    if parallelism > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            results = list(pool.map(_run_point, points))
    else:
        results = [_run_point(p) for p in points]

    by_point = {(_value_label(v), s): row for (_, v, s), row in zip(points, results)}
    rows: list[dict] = []
    for value in sorted(spec.values, key=_sort_key):
        value_rows = [by_point[(_value_label(value), seed)] for seed in sorted(spec.seeds)]
        for row in value_rows:
            row["axis"] = spec.axis.value
            rows.append(row)
        for agg in _aggregate(value, value_rows):
            agg["axis"] = spec.axis.value
            rows.append(agg)
    return rows


def write_sweep_csv(path, rows: list[dict]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=SWEEP_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
