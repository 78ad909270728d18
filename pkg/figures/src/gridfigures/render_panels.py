"""Two stacked panels, power utilisation and Gini index versus system size.

Takes one size-axis sweep.csv per topology and overlays them, one curve
per file, log-scaled N.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .io import SchemaError, read_sweep


def render(paths, labels, out_path, dpi: int = 150) -> None:
    fig, (ax_util, ax_gini) = plt.subplots(2, 1, figsize=(6, 7), sharex=True)
    for path, label in zip(paths, labels):
        axis, _, util_means = read_sweep(path, "P_util")
        if axis != "N":
            raise SchemaError(f"{path}: panels need a size sweep (axis = N), got axis = {axis}")
        _, _, gini_means = read_sweep(path, "gini")
        ax_util.plot([v for v, _ in util_means], [y for _, y in util_means], "o-", label=label)
        ax_gini.plot([v for v, _ in gini_means], [y for _, y in gini_means], "o-", label=label)
    ax_util.set_ylabel("power utilisation")
    ax_util.set_xscale("log")
    ax_util.legend()
    ax_gini.set_ylabel("Gini index")
    ax_gini.set_xlabel("system size N")
    fig.tight_layout()
    fig.savefig(out_path, dpi=dpi)
    plt.close(fig)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="Utilisation and inequality versus size, by topology.")
    parser.add_argument("sweeps", nargs="+", help="size-axis sweep.csv files, one per topology")
    parser.add_argument("--labels", nargs="+", help="curve labels (default: file parent names)")
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--dpi", type=int, default=150)
    args = parser.parse_args(argv)
    labels = args.labels or [Path(p).resolve().parent.name for p in args.sweeps]
    if len(labels) != len(args.sweeps):
        print("error: need one label per sweep file", file=sys.stderr)
        return 1
    try:
        render(args.sweeps, labels, args.out, dpi=args.dpi)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
