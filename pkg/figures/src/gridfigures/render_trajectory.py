"""Trajectory panels: average resistors per agent over time, one panel per run."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .io import SchemaError, read_summary


def render(paths, labels, out_path, mu: float | None = None, dpi: int = 150) -> None:
    fig, axes = plt.subplots(len(paths), 1, figsize=(6, 2.2 * len(paths)), sharex=False, squeeze=False)
    for ax, path, label in zip(axes[:, 0], paths, labels):
        summary = read_summary(path)
        ax.plot(summary["t"], summary["a_avg"], lw=0.8)
        if mu is not None:
            ax.axhline(mu, color="C3", ls="--", lw=0.8, label=f"optimum {mu:g}")
            ax.legend(loc="upper right", fontsize=8)
        ax.set_ylabel("avg resistors")
        ax.set_title(label, fontsize=9)
    axes[-1, 0].set_xlabel("time step")
    fig.tight_layout()
    fig.savefig(out_path, dpi=dpi)
    plt.close(fig)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Plot a_avg trajectories from summary.csv files.")
    parser.add_argument("summaries", nargs="+", help="summary.csv files, one panel each")
    parser.add_argument("--labels", nargs="+", help="panel titles (default: file parent names)")
    parser.add_argument("--mu", type=float, help="draw the optimal a_avg reference line")
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--dpi", type=int, default=150)
    args = parser.parse_args(argv)
    labels = args.labels or [Path(p).resolve().parent.name for p in args.summaries]
    if len(labels) != len(args.summaries):
        print("error: need one label per summary file", file=sys.stderr)
        return 1
    try:
        render(args.summaries, labels, args.out, mu=args.mu, dpi=args.dpi)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
