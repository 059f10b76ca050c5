"""Command-line front end.

Subcommands: ``wigner``, ``charge``, ``current`` (tables, CSV or JSON),
``fidelity`` and ``qsl`` (scalar JSON) and ``validate`` (the built-in oracle
and property suite).  Values come from flags, then a JSON config file, then
the documented per-command defaults, which mirror the figure bundles
(k0 = hbar = m = 1, occupations 0; beta = lam = 1 for the kink; m = 0.3 for
the sine-Gordon charge profile).

Exit status: 0 success, 1 usage error, 2 numerical failure, 3 validation
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .numerics import GridSpec
from .observables import DensityProfile, QSLInputs, charge_density, current_density, fidelity, qsl_time, sg_charge_closed
from .states import GaussianPacket, HarmonicOscillator, Kink, PhysicalParams, SineGordon
from .wigner import WignerField, kink_wigner_field, sg_wigner_field, wigner_transform
from . import validate as validation_suite

__all__ = ["RunConfig", "entrypoint", "main", "parse_config", "run"]

STATES = ("sg", "kink", "gaussian", "ho")
MODES = ("closed-form", "numeric")
FORMATS = ("csv", "json")
TABLE_COMMANDS = ("wigner", "charge", "current")

_PARAM_FIELDS = ("m", "lam", "hbar", "k0", "beta", "n_k", "n_minus_k", "n_bo", "n_k2", "n_minus_k2")
_GRID_FIELDS = ("x_min", "x_max", "nx", "k_min", "k_max", "nk", "y_cutoff", "ny")
_STATE_FIELDS = ("n", "center", "width", "boost")
_SECOND_STATE_FIELDS = ("state_b", "n_b", "center_b", "width_b", "boost_b")
_SCALAR_FIELDS = ("fidelity", "delta_e")
_COMMON_FIELDS = ("state", "mode", "format", "out")

_FILE_KEYS = {
    "wigner": _COMMON_FIELDS + _PARAM_FIELDS + _GRID_FIELDS + _STATE_FIELDS,
    "charge": _COMMON_FIELDS + _PARAM_FIELDS + _GRID_FIELDS + _STATE_FIELDS,
    "current": _COMMON_FIELDS + _PARAM_FIELDS + _GRID_FIELDS + _STATE_FIELDS,
    "fidelity": _COMMON_FIELDS + _PARAM_FIELDS + _GRID_FIELDS + _STATE_FIELDS + _SECOND_STATE_FIELDS,
    "qsl": ("format", "out", "hbar") + _SCALAR_FIELDS,
    "validate": (),
}

_DEFAULT_GRIDS = {
    ("wigner", "sg"): dict(x_min=-4.0, x_max=4.0, nx=81, k_min=-1.0, k_max=1.0, nk=81),
    ("wigner", "kink"): dict(x_min=-6.0, x_max=6.0, nx=121, k_min=-2.0, k_max=2.0, nk=81),
    ("wigner", "gaussian"): dict(x_min=-4.0, x_max=4.0, nx=81, k_min=-4.0, k_max=4.0, nk=81),
    ("wigner", "ho"): dict(x_min=-4.0, x_max=4.0, nx=81, k_min=-4.0, k_max=4.0, nk=81),
    ("charge", "sg"): dict(x_min=-20.0, x_max=20.0, nx=201, k_min=-1.0, k_max=1.0, nk=81),
    ("charge", "kink"): dict(x_min=-10.0, x_max=6.0, nx=161, k_min=-4.0, k_max=4.0, nk=321),
    ("charge", "gaussian"): dict(x_min=-6.0, x_max=6.0, nx=121, k_min=-12.0, k_max=12.0, nk=481),
    ("charge", "ho"): dict(x_min=-6.0, x_max=6.0, nx=121, k_min=-12.0, k_max=12.0, nk=481),
    ("fidelity", None): dict(x_min=-8.0, x_max=8.0, nx=161, k_min=-8.0, k_max=8.0, nk=161),
}


class UsageError(ValueError):
    """Bad flags or config values; maps to exit status 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; this front end reserves 2 for
    # numerical failures, so usage problems are remapped to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved invocation: command, state selection, physics, grid, output."""

    command: str
    state: str
    mode: str
    params: PhysicalParams
    grid: GridSpec
    n: int
    center: float
    width: float
    boost: float
    state_b: str
    n_b: int
    center_b: float
    width_b: float
    boost_b: float
    fidelity_value: float | None
    delta_e: float | None
    fmt: str
    out: str | None


def build_parser() -> _Parser:
    parser = _Parser(prog="solwig", description="Phase-space observables for soliton and reference states.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, second_state=False):
        p.add_argument("--config", help="JSON file with the same keys as the flags")
        p.add_argument("--state", choices=STATES, help="state selector (default: gaussian)")
        p.add_argument("--mode", choices=MODES, help="closed-form (sg only) or numeric")
        p.add_argument("--format", choices=FORMATS, help="table output format (default: csv)")
        p.add_argument("--out", help="output path (default: stdout)")
        for name in _PARAM_FIELDS:
            flag = "--" + name.replace("_", "-")
            kind = int if name.startswith("n_") else float
            p.add_argument(flag, type=kind, dest=name)
        for name, kind in (("n", int), ("center", float), ("width", float), ("boost", float)):
            p.add_argument("--" + name, type=kind, dest=name)
        for name in _GRID_FIELDS:
            flag = "--" + name.replace("_", "-")
            kind = int if name in ("nx", "nk", "ny") else float
            p.add_argument(flag, type=kind, dest=name)
        if second_state:
            p.add_argument("--state-b", choices=STATES, dest="state_b", help="second state (default: --state)")
            for name, kind in (("n_b", int), ("center_b", float), ("width_b", float), ("boost_b", float)):
                p.add_argument("--" + name.replace("_", "-"), type=kind, dest=name)

    add_common(sub.add_parser("wigner", help="phase-space field on the (x, k) grid"))
    add_common(sub.add_parser("charge", help="charge density Q(x) = Int W dk"))
    add_common(sub.add_parser("current", help="current density J(x) = Int k W dk"))
    add_common(sub.add_parser("fidelity", help="phase-space overlap of two states"), second_state=True)

    qsl = sub.add_parser("qsl", help="Mandelstam-Tamm speed-limit time")
    qsl.add_argument("--config", help="JSON file with the same keys as the flags")
    qsl.add_argument("--fidelity", type=float, dest="fidelity")
    qsl.add_argument("--delta-e", type=float, dest="delta_e")
    qsl.add_argument("--hbar", type=float, dest="hbar")
    qsl.add_argument("--format", choices=FORMATS, help="ignored; scalars are always JSON")
    qsl.add_argument("--out", help="output path (default: stdout)")

    sub.add_parser("validate", help="run the oracle/property suite and report each check")
    return parser


def _load_config_file(path: str, command: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"config file {path} must hold a JSON object")
    allowed = set(_FILE_KEYS[command])
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise UsageError(f"unknown config keys for {command}: {', '.join(unknown)}")
    return data


def _merge(defaults: dict, file_values: dict, flag_values: dict) -> dict:
    merged = dict(defaults)
    merged.update({k: v for k, v in file_values.items() if v is not None})
    merged.update({k: v for k, v in flag_values.items() if v is not None})
    return merged


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    """Resolve flags, optional JSON config file and defaults into a RunConfig."""
    ns = build_parser().parse_args(argv)
    command = ns.command
    flag_values = {k: v for k, v in vars(ns).items() if k not in ("command", "config")}
    file_values = _load_config_file(ns.config, command) if getattr(ns, "config", None) else {}

    if command == "validate":
        return RunConfig(
            command=command, state="gaussian", mode="numeric", params=PhysicalParams(),
            grid=GridSpec(-1, 1, 3, -1, 1, 3), n=0, center=0.0, width=1.0, boost=0.0,
            state_b="gaussian", n_b=0, center_b=0.0, width_b=1.0, boost_b=0.0,
            fidelity_value=None, delta_e=None, fmt="csv", out=None,
        )

    if command == "qsl":
        merged = _merge({"hbar": 1.0, "format": "json", "out": None, "fidelity": None, "delta_e": None},
                        file_values, flag_values)
        if merged["fidelity"] is None or merged["delta_e"] is None:
            raise UsageError("qsl requires --fidelity and --delta-e (or config values)")
        try:
            params = PhysicalParams(hbar=float(merged["hbar"]))
            QSLInputs(float(merged["fidelity"]), float(merged["delta_e"]), float(merged["hbar"]))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        return RunConfig(
            command=command, state="gaussian", mode="numeric", params=params,
            grid=GridSpec(-1, 1, 3, -1, 1, 3), n=0, center=0.0, width=1.0, boost=0.0,
            state_b="gaussian", n_b=0, center_b=0.0, width_b=1.0, boost_b=0.0,
            fidelity_value=float(merged["fidelity"]), delta_e=float(merged["delta_e"]),
            fmt="json", out=merged["out"],
        )

    state = flag_values.get("state") or file_values.get("state") or "gaussian"
    if state not in STATES:
        raise UsageError(f"unknown state {state!r}; choose from {', '.join(STATES)}")

    defaults: dict = dict(
        state=state, mode="closed-form" if state == "sg" else "numeric",
        format="csv", out=None,
        m=1.0, lam=1.0, hbar=1.0, k0=1.0, beta=None,
        n_k=0, n_minus_k=0, n_bo=0, n_k2=0, n_minus_k2=0,
        n=0, center=0.0, width=1.0, boost=0.0,
        y_cutoff=10.0, ny=2001,
    )
    if state == "kink":
        defaults["beta"] = 1.0
    if state == "sg" and command in ("charge", "current"):
        defaults["m"] = 0.3
    grid_key = (command, None) if command == "fidelity" else ("charge" if command == "current" else command, state)
    defaults.update(_DEFAULT_GRIDS[grid_key])
    if command == "fidelity":
        defaults.update(state_b=state, n_b=0, center_b=0.0, width_b=1.0, boost_b=0.0)

    merged = _merge(defaults, file_values, flag_values)

    mode = merged["mode"]
    if mode not in MODES:
        raise UsageError(f"unknown mode {mode!r}; choose from {', '.join(MODES)}")
    if mode == "closed-form" and state != "sg":
        raise UsageError(f"state {state!r} has no closed form; use --mode numeric")
    if state == "sg" and mode == "numeric":
        explicit = flag_values.get("y_cutoff") is not None or "y_cutoff" in file_values
        if not explicit:
            raise UsageError(
                "sine-Gordon numeric transforms diverge on the infinite window; "
                "pass an explicit --y-cutoff to request a window-truncated field"
            )
    if merged["format"] not in FORMATS:
        raise UsageError(f"unknown format {merged['format']!r}")

    try:
        params = PhysicalParams(**{k: merged[k] for k in _PARAM_FIELDS})
        grid = GridSpec(**{k: merged[k] for k in _GRID_FIELDS})
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc

    for order_key in ("n", "n_b") if command == "fidelity" else ("n",):
        order = merged.get(order_key, 0)
        if not isinstance(order, int) or not 0 <= order <= 10:
            raise UsageError(f"oscillator order {order_key}={order!r} must be an integer in [0, 10]")

    return RunConfig(
        command=command, state=state, mode=mode, params=params, grid=grid,
        n=merged["n"], center=float(merged["center"]), width=float(merged["width"]), boost=float(merged["boost"]),
        state_b=merged.get("state_b") or state, n_b=merged.get("n_b", 0),
        center_b=float(merged.get("center_b", 0.0)), width_b=float(merged.get("width_b", 1.0)),
        boost_b=float(merged.get("boost_b", 0.0)),
        fidelity_value=None, delta_e=None, fmt=merged["format"], out=merged["out"],
    )


def _resolved_params(config: RunConfig) -> dict:
    info = {
        "command": config.command,
        "state": config.state,
        "mode": config.mode,
        "m": config.params.m, "lam": config.params.lam, "hbar": config.params.hbar,
        "k0": config.params.k0, "beta": config.params.beta,
        "n_k": config.params.n_k, "n_minus_k": config.params.n_minus_k,
        "n_bo": config.params.n_bo, "n_k2": config.params.n_k2, "n_minus_k2": config.params.n_minus_k2,
        "x_min": config.grid.x_min, "x_max": config.grid.x_max, "nx": config.grid.nx,
        "k_min": config.grid.k_min, "k_max": config.grid.k_max, "nk": config.grid.nk,
        "y_cutoff": config.grid.y_cutoff, "ny": config.grid.ny,
    }
    if config.state == "ho":
        info["n"] = config.n
    if config.state == "gaussian":
        info.update(center=config.center, width=config.width, boost=config.boost)
    if config.command == "fidelity":
        info["state_b"] = config.state_b
        if config.state_b == "ho":
            info["n_b"] = config.n_b
        if config.state_b == "gaussian":
            info.update(center_b=config.center_b, width_b=config.width_b, boost_b=config.boost_b)
    return info


def _make_state(config: RunConfig, which: str = "a"):
    name = config.state if which == "a" else config.state_b
    if name == "sg":
        return SineGordon(config.params)
    if name == "kink":
        return Kink(config.params)
    if name == "ho":
        return HarmonicOscillator(config.n if which == "a" else config.n_b)
    if which == "a":
        return GaussianPacket(config.center, config.width, config.boost, config.params.hbar)
    return GaussianPacket(config.center_b, config.width_b, config.boost_b, config.params.hbar)


def _build_field(config: RunConfig, which: str = "a") -> WignerField:
    state = config.state if which == "a" else config.state_b
    if state == "sg" and config.mode == "closed-form":
        return sg_wigner_field(config.params, config.grid)
    if state == "kink":
        return kink_wigner_field(config.params, config.grid)
    return wigner_transform(_make_state(config, which), config.grid, hbar=config.params.hbar)


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def _field_rows(field: WignerField):
    x = field.grid.x_values()
    k = field.grid.k_values()
    for i in range(field.grid.nx):
        for j in range(field.grid.nk):
            w = field.values[i, j]
            yield (x[i], k[j], w.real, w.imag, abs(w))


def _profile_rows(profile: DensityProfile):
    for xi, value in zip(profile.x, profile.values):
        yield (xi, value.real)


def _emit_table(columns: tuple[str, ...], rows, config: RunConfig, stream: TextIO) -> None:
    params = _resolved_params(config)
    if config.fmt == "csv":
        stream.write("# params: " + json.dumps(params, sort_keys=True) + "\n")
        stream.write(",".join(columns) + "\n")
        for row in rows:
            stream.write(",".join(_fmt(v) for v in row) + "\n")
    else:
        payload = {"params": params, "columns": list(columns), "rows": [list(map(float, row)) for row in rows]}
        stream.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _emit_scalar(payload: dict, config: RunConfig, stream: TextIO) -> None:
    stream.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def run(config: RunConfig, stdout: TextIO | None = None) -> int:
    """Execute a resolved configuration; returns the process exit status."""
    stdout = stdout if stdout is not None else sys.stdout

    if config.command == "validate":
        results = validation_suite.run_all()
        passed = validation_suite.report(results, stdout)
        return 0 if passed else 3

    def deliver(write) -> None:
        if config.out:
            with open(config.out, "w", encoding="utf-8", newline="\n") as handle:
                write(handle)
        else:
            write(stdout)

    if config.command == "qsl":
        inputs = QSLInputs(config.fidelity_value, config.delta_e, config.params.hbar)
        payload = {
            "tau_qsl": qsl_time(inputs),
            "params": {"fidelity": inputs.fidelity, "delta_e": inputs.delta_e, "hbar": inputs.hbar},
        }
        deliver(lambda s: _emit_scalar(payload, config, s))
        return 0

    if config.command == "fidelity":
        field_a = _build_field(config, "a")
        field_b = _build_field(config, "b")
        result = fidelity(field_a, field_b)
        payload = {
            "fidelity": result.value,
            "raw_re": result.raw.real,
            "raw_im": result.raw.imag,
            "clamped": result.clamped,
            "params": _resolved_params(config),
        }
        deliver(lambda s: _emit_scalar(payload, config, s))
        return 0

    if config.command == "wigner":
        field = _build_field(config)
        deliver(lambda s: _emit_table(("x", "k", "re_w", "im_w", "abs_w"), _field_rows(field), config, s))
        return 0

    if config.command == "charge":
        if config.state == "sg" and config.mode == "closed-form":
            x = config.grid.x_values()
            profile = DensityProfile(x=x, values=sg_charge_closed(x, config.params), kind="charge")
        else:
            profile = charge_density(_build_field(config))
        deliver(lambda s: _emit_table(("x", "value"), _profile_rows(profile), config, s))
        return 0

    if config.command == "current":
        profile = current_density(_build_field(config))
        deliver(lambda s: _emit_table(("x", "value"), _profile_rows(profile), config, s))
        return 0

    raise UsageError(f"unknown command {config.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    """Parse, run, and map failures onto the documented exit statuses."""
    try:
        config = parse_config(argv)
    except UsageError as exc:
        print(f"solwig: error: {exc}", file=sys.stderr)
        return 1
    try:
        return run(config)
    except ValueError as exc:
        print(f"solwig: error: {exc}", file=sys.stderr)
        return 1
    except ArithmeticError as exc:
        print(f"solwig: numerical failure: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())
