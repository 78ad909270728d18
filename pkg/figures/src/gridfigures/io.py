"""Parsers for the gridcommons file schemas, with line-level error context."""

from __future__ import annotations

import csv

import numpy as np


class SchemaError(ValueError):
    """Input file violates its documented schema."""


def read_raster(path) -> np.ndarray:
    """Raster file -> (frames, N) int8 array of states in {-1, 0, 1}."""
    rows = []
    width = None
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                raise SchemaError(f"{path}: line {lineno}: empty line")
            tokens = line.split(" ")
            if width is None:
                width = len(tokens)
            elif len(tokens) != width:
                raise SchemaError(f"{path}: line {lineno}: expected {width} values, got {len(tokens)}")
            try:
                values = [int(tok) for tok in tokens]
            except ValueError:
                raise SchemaError(f"{path}: line {lineno}: non-integer value") from None
            for v in values:
                if v not in (-1, 0, 1):
                    raise SchemaError(f"{path}: line {lineno}: state {v} outside {{-1,0,1}}")
            rows.append(values)
    if not rows:
        raise SchemaError(f"{path}: empty raster file")
    return np.array(rows, dtype=np.int8)


def _read_csv(path, required: tuple[str, ...]) -> list[dict]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [col for col in required if col not in header]
        if missing:
            raise SchemaError(f"{path}: missing columns: {', '.join(missing)}")
        rows = list(reader)
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return rows


def read_summary(path) -> dict[str, np.ndarray]:
    """summary.csv -> column arrays (t, n, a_avg, P_all and the counts)."""
    rows = _read_csv(path, ("t", "n", "a_avg", "P_all", "cooperator_count", "defector_count", "ignore_count"))
    out = {}
    for col in ("t", "n", "cooperator_count", "defector_count", "ignore_count"):
        out[col] = np.array([int(r[col]) for r in rows])
    for col in ("a_avg", "P_all"):
        out[col] = np.array([float(r[col]) for r in rows])
    return out


def read_sweep(path, metric: str):
    """sweep.csv -> (axis name, run points, mean points) for one metric.

    Run points are (value, metric) pairs from kind=run rows; mean points
    come from kind=mean rows. Failed runs (error set, empty metrics) are
    skipped. Values parse as floats except for the topology axis.
    """
    rows = _read_csv(path, ("kind", "axis", "value", "seed", metric, "error"))
    axis = rows[0]["axis"]
    numeric = axis != "topology"

    def parse_value(text):
        return float(text) if numeric else text

    runs, means = [], []
    for r in rows:
        if r["kind"] == "run" and not r["error"] and r[metric] != "":
            runs.append((parse_value(r["value"]), float(r[metric])))
        elif r["kind"] == "mean" and r[metric] != "":
            means.append((parse_value(r["value"]), float(r[metric])))
    if not means:
        raise SchemaError(f"{path}: no aggregate rows with a {metric!r} value")
    return axis, runs, means
