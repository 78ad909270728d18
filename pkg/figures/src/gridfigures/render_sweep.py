"""Sweep curve: per-value mean line with per-seed scatter for one metric."""

from __future__ import annotations

import argparse
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .io import SchemaError, read_sweep

AXIS_LABELS = {
    "N": "system size N",
    "lambda_min": "minimal gain",
    "p_err": "communication error probability",
    "topology": "topology",
}


def render(path, metric: str, out_path, logx: bool | None = None, dpi: int = 150) -> None:
    axis, runs, means = read_sweep(path, metric)
    numeric = axis != "topology"
    if logx is None:
        logx = axis == "N"

    fig, ax = plt.subplots(figsize=(6, 4))
    if numeric:
        ax.scatter([v for v, _ in runs], [y for _, y in runs], s=12, alpha=0.45, label="runs")
        ax.plot([v for v, _ in means], [y for _, y in means], "o-", color="C1", label="mean")
        if logx:
            ax.set_xscale("log")
    else:
        labels = [v for v, _ in means]
        positions = {label: k for k, label in enumerate(labels)}
        ax.scatter([positions[v] for v, _ in runs], [y for _, y in runs], s=12, alpha=0.45, label="runs")
        ax.plot(range(len(labels)), [y for _, y in means], "o-", color="C1", label="mean")
        ax.set_xticks(range(len(labels)), labels)
    ax.set_xlabel(AXIS_LABELS.get(axis, axis))
    ax.set_ylabel(metric)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_path, dpi=dpi)
    plt.close(fig)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Plot a metric over a gridcommons sweep.")
    parser.add_argument("sweep", help="sweep.csv produced by `gridcommons sweep`")
    parser.add_argument("--metric", default="c_avg", choices=("c_avg", "P_util", "gini", "a_avg_mean"))
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--logx", action="store_true", help="force a log-scaled x axis")
    parser.add_argument("--dpi", type=int, default=150)
    args = parser.parse_args(argv)
    try:
        render(args.sweep, args.metric, args.out, logx=args.logx or None, dpi=args.dpi)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
