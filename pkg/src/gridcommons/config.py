"""Flat key = value config files for runs and sweeps.

Format: one ``key = value`` pair per line; blank lines and ``#`` comments
are ignored. Run configs take the SystemParams keys; sweep configs add
``axis``, ``values`` and ``seeds``. Errors carry file and line context.
"""

from __future__ import annotations

from .params import SystemParams, Topology, TopologySpec, ValidationError
from .sweep import SweepAxis, SweepSpec

RUN_KEYS = {
    "N", "R_V_ohm", "R0_ohm", "V_volt", "lambda_min", "p_err",
    "topology", "ws_K", "ws_beta", "ba_m", "steps", "burn_in", "seed",
}
SWEEP_KEYS = RUN_KEYS | {"axis", "values", "seeds"}
_REQUIRED = ("N", "R_V_ohm", "R0_ohm", "V_volt", "lambda_min", "p_err", "topology", "steps", "seed")


class ConfigError(ValidationError):
    """Malformed or incomplete config file; message carries line context."""


def _parse_lines(path, allowed: set[str]) -> dict[str, str]:
    entries: dict[str, str] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw.strip()!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in allowed:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            if key in entries:
                raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
            if not value:
                raise ConfigError(f"{path}:{lineno}: empty value for {key!r}")
            entries[key] = value
    return entries


def _convert(path, key: str, value: str, kind):
    try:
        return kind(value)
    except ValueError:
        raise ConfigError(f"{path}: key {key!r}: cannot parse {value!r} as {kind.__name__}") from None


def _topology_spec(path, entries: dict[str, str]) -> TopologySpec:
    label = entries["topology"]
    try:
        kind = Topology(label)
    except ValueError:
        options = ", ".join(t.value for t in Topology)
        raise ConfigError(f"{path}: key 'topology': unknown topology {label!r} (expected one of: {options})") from None
    # family-specific keys are parsed whenever present so a topology-axis
    # sweep can substitute the kind while reusing them
    spec_kwargs = {}
    for key, conv in (("ws_K", int), ("ws_beta", float), ("ba_m", int)):
        if key in entries:
            spec_kwargs[key] = _convert(path, key, entries[key], conv)
    if kind is Topology.WATTS_STROGATZ:
        for key in ("ws_K", "ws_beta"):
            if key not in spec_kwargs:
                raise ConfigError(f"{path}: missing required key {key!r} for topology 'ws'")
    if kind is Topology.BARABASI_ALBERT and "ba_m" not in spec_kwargs:
        raise ConfigError(f"{path}: missing required key 'ba_m' for topology 'ba'")
    return TopologySpec(kind=kind, **spec_kwargs)


def _system_params(path, entries: dict[str, str]) -> SystemParams:
    for key in _REQUIRED:
        if key not in entries:
            raise ConfigError(f"{path}: missing required key {key!r}")
    return SystemParams(
        N=_convert(path, "N", entries["N"], int),
        R_V=_convert(path, "R_V_ohm", entries["R_V_ohm"], float),
        R_0=_convert(path, "R0_ohm", entries["R0_ohm"], float),
        V=_convert(path, "V_volt", entries["V_volt"], float),
        lambda_min=_convert(path, "lambda_min", entries["lambda_min"], float),
        p_err=_convert(path, "p_err", entries["p_err"], float),
        topology=_topology_spec(path, entries),
        steps=_convert(path, "steps", entries["steps"], int),
        burn_in=_convert(path, "burn_in", entries.get("burn_in", "0"), int),
        seed=_convert(path, "seed", entries["seed"], int),
    )


def load_run_config(path) -> SystemParams:
    """Parse a single-run config file."""
    return _system_params(path, _parse_lines(path, RUN_KEYS))


def load_sweep_config(path) -> SweepSpec:
    """Parse a sweep config file: a base run config plus axis/values/seeds."""
    entries = _parse_lines(path, SWEEP_KEYS)
    for key in ("axis", "values", "seeds"):
        if key not in entries:
            raise ConfigError(f"{path}: missing required key {key!r}")
    base = _system_params(path, entries)

    axis_label = entries["axis"]
    try:
        axis = SweepAxis(axis_label)
    except ValueError:
        options = ", ".join(a.value for a in SweepAxis)
        raise ConfigError(f"{path}: key 'axis': unknown axis {axis_label!r} (expected one of: {options})") from None

    tokens = [tok.strip() for tok in entries["values"].split(",") if tok.strip()]
    if not tokens:
        raise ConfigError(f"{path}: key 'values': must list at least one value")
    if axis is SweepAxis.SYSTEM_SIZE:
        values = tuple(_convert(path, "values", tok, int) for tok in tokens)
    elif axis is SweepAxis.TOPOLOGY:
        values = []
        for tok in tokens:
            try:
                values.append(Topology(tok))
            except ValueError:
                options = ", ".join(t.value for t in Topology)
                raise ConfigError(f"{path}: key 'values': unknown topology {tok!r} (expected one of: {options})") from None
        values = tuple(values)
    else:
        values = tuple(_convert(path, "values", tok, float) for tok in tokens)

    seed_tokens = [tok.strip() for tok in entries["seeds"].split(",") if tok.strip()]
    if not seed_tokens:
        raise ConfigError(f"{path}: key 'seeds': must list at least one seed")
    seeds = tuple(_convert(path, "seeds", tok, int) for tok in seed_tokens)

    return SweepSpec(base=base, axis=axis, values=values, seeds=seeds)
