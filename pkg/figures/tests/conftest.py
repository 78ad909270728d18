"""Golden run/sweep directories produced through the simulator's CLI."""

import subprocess
import sys

import pytest

RUN_CONFIG = """\
N = 30
R_V_ohm = 2
R0_ohm = 200
V_volt = 1
lambda_min = 0.005
p_err = 0.01
topology = ring
steps = 300
burn_in = 50
seed = 7
"""

SWEEP_TAIL = """\
axis = N
values = 10, 20
seeds = 1, 2
"""


def run_cli(args):
    proc = subprocess.run(
        [sys.executable, "-m", "gridcommons.cli", *args],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    return proc


@pytest.fixture(scope="session")
def golden_run(tmp_path_factory):
    root = tmp_path_factory.mktemp("golden_run")
    cfg = root / "run.cfg"
    cfg.write_text(RUN_CONFIG)
    out = root / "out"
    run_cli(["--out-dir", str(out), "--quiet", "run", str(cfg)])
    return out


@pytest.fixture(scope="session")
def golden_sweeps(tmp_path_factory):
    """Two size-axis sweeps (ring and BA m=2) for the panel figure."""
    root = tmp_path_factory.mktemp("golden_sweeps")
    outs = {}
    for name, topo_lines in (("ring", "topology = ring\n"), ("ba", "topology = ba\nba_m = 2\n")):
        cfg = root / f"{name}.cfg"
        cfg.write_text(
            "N = 10\nR_V_ohm = 2\nR0_ohm = 200\nV_volt = 1\nlambda_min = 0.005\n"
            "p_err = 0.01\n" + topo_lines + "steps = 200\nburn_in = 20\nseed = 0\n" + SWEEP_TAIL
        )
        out = root / name
        run_cli(["--out-dir", str(out), "--quiet", "sweep", str(cfg)])
        outs[name] = out / "sweep.csv"
    return outs
