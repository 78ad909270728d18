"""Command-line interface: single runs, sweeps, and graph export.

    gridcommons run <config>          simulate once, write the run artifacts
    gridcommons sweep <config>        run a parameter sweep, write sweep.csv
    gridcommons graph-export <config> write the communication graph edge list

Outputs land in --out-dir (created if missing). Exit code 0 on success,
1 on any validation or I/O failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import metrics, outputs
from .config import load_run_config, load_sweep_config
from .engine import STREAM_GRAPH, build_graph, run, substream
from .params import ValidationError, validate_params
from .sweep import run_sweep, write_sweep_csv


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gridcommons", description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="out", help="directory for output files (default: out)")
    parser.add_argument("--quiet", action="store_true", help="suppress progress output")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute one simulation run")
    p_run.add_argument("config", help="run config file")

    p_sweep = sub.add_parser("sweep", help="execute a parameter sweep")
    p_sweep.add_argument("config", help="sweep config file")
    p_sweep.add_argument("--parallelism", type=int, default=1, help="worker processes (default: 1)")

    p_graph = sub.add_parser("graph-export", help="write the communication graph as an edge list")
    p_graph.add_argument("config", help="run config file")
    return parser


def _out_dir(args) -> Path:
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_run(args) -> int:
    params = validate_params(load_run_config(args.config))
    result = run(params)
    report = metrics.summarize(result)
    out = _out_dir(args)
    outputs.write_raster(out / "raster.txt", result.strategies)
    outputs.write_summary(out / "summary.csv", result)
    outputs.write_metrics(out / "metrics.csv", params, report)
    outputs.write_resolved_config(out / "config_resolved.txt", params)
    if not args.quiet:
        print(
            f"run complete: N={params.N} steps={params.steps} seed={params.seed} "
            f"c_avg={report.c_avg:.4f} P_util={report.P_util:.4f} gini={report.gini:.4f}"
        )
        print(f"outputs in {out}")
    return 0


def cmd_sweep(args) -> int:
    spec = load_sweep_config(args.config)
    if args.parallelism < 1:
        raise ValidationError(f"parallelism: must be >= 1, got {args.parallelism}")
    rows = run_sweep(spec, parallelism=args.parallelism)
    out = _out_dir(args)
    write_sweep_csv(out / "sweep.csv", rows)
    if not args.quiet:
        runs = sum(1 for r in rows if r["kind"] == "run")
        failures = sum(1 for r in rows if r["error"])
        print(f"sweep complete: axis={spec.axis.value} runs={runs} failures={failures}")
        print(f"outputs in {out}")
    return 0


def cmd_graph_export(args) -> int:
    params = validate_params(load_run_config(args.config))
    graph = build_graph(params, substream(params.seed, STREAM_GRAPH))
    out = _out_dir(args)
    graph.write_edge_list(out / "graph.txt")
    if not args.quiet:
        print(f"graph exported: N={graph.n} edges={graph.edge_count}")
        print(f"outputs in {out}")
    return 0


_COMMANDS = {"run": cmd_run, "sweep": cmd_sweep, "graph-export": cmd_graph_export}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
