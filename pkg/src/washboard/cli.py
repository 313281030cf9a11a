"""``washboard`` command line front end.

Every subcommand resolves its parameters as defaults < ``--config`` file <
explicit flags, writes its outputs into ``--out`` and leaves a
``manifest.json`` next to them.  A manifest is itself a valid ``--config``
file, and ``washboard replay MANIFEST`` re-runs it.

Exit codes: 0 success, 1 usage error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path
from typing import Any, Callable

import numpy as np
from scipy.optimize import minimize_scalar

from . import __version__
from .constants import H
from .core import (WashboardPotential, barrier_height, critical_tilt, find_extrema,
                   pendulum_potential, PendulumParams)
from .dynamics import (DynamicalSystem, IntegrationError, SimConfig, classify_state,
                       mean_velocity, simulate_deterministic, simulate_langevin)
from .josephson import (JunctionParams, SweepError, build_rcsj_system, detect_plateaus,
                        iv_curve, junction_energies, shapiro_scenario)
from .optics import (BesselBeamSetup, BracketError, GaussianBeam, LatticeParams,
                     PolarizabilityCurve, antinode_values, bessel_beam_intensity,
                     dipole_potential_depth, gaussian_intensity, lattice_period,
                     magic_wavelength, ring_slit_zmax)
from .output import write_json, write_table
from .quantum import (ConvergenceError, WellProblem, eigenlevels, josephson_well,
                      level_spacings)

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2


class UsageError(Exception):
    pass


class NumericalFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _range(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(v) for v in str(text).split(":"))
    except ValueError:
        raise UsageError(f"range must look like LO:HI, got {text!r}") from None
    if not lo < hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _floats(value) -> list[float]:
    if isinstance(value, (list, tuple)):
        return [float(v) for v in value]
    return [float(v) for v in str(value).split(",") if v.strip()]


def _bias_list(p: dict) -> list[float]:
    if p.get("biases"):
        return _floats(p["biases"])
    lo, hi, step = float(p["i_start"]), float(p["i_stop"]), float(p["i_step"])
    if not step > 0 or hi < lo:
        raise UsageError("bias sweep needs i_step > 0 and i_stop >= i_start")
    n = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [round(lo + j * step, 12) for j in range(n)]


def _sim_config(p: dict, seed=None, temperature=0.0) -> SimConfig:
    try:
        return SimConfig(dt=float(p["dt"]), t_end=float(p["t_end"]), x0=float(p["x0"]),
                         v0=float(p["v0"]), sample_stride=int(p["stride"]), seed=seed,
                         temperature=float(temperature))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# --- subcommands ------------------------------------------------------------
# each returns (written files, results summary for the manifest)


def cmd_potential(p: dict, out: Path, fmt: str):
    if p["josephson"]:
        if p["i"] is None:
            raise UsageError("--josephson needs --i")
        pot = WashboardPotential(float(p["i"]), 1.0, 1.0, 0.0)
        units = "E_J"
    else:
        B, k = float(p["B"]), float(p["k"])
        A = float(p["ratio"]) * B * k if p["ratio"] is not None else float(p["A"])
        try:
            pot = WashboardPotential(A, B, k, float(p["phi0"]))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        units = "energy"
    lo, hi = _range(p["range"])
    n = int(p["n"])
    if n < 2:
        raise UsageError("--n must be >= 2")
    x = np.linspace(lo, hi, n)
    files = [write_table(out / "potential", ["x", "U", "F"], ["length", units, units + "/length"],
                         [x, pot.evaluate(x), pot.force(x)], {"potential": pot.describe()}, fmt)]
    ext = find_extrema(pot, lo, hi)
    summary = {
        "potential": pot.describe(),
        "critical_tilt": critical_tilt(pot),
        "tilt_ratio": pot.tilt_ratio,
        "barrier_height": barrier_height(pot) if pot.has_wells() else None,
        "inflection": any(e.kind == "inflection" for e in ext),
        "extrema": [{"position": e.position, "value": e.value, "kind": e.kind, "index": e.index}
                    for e in ext],
        "minima": [e.position for e in ext if e.kind == "minimum"],
        "maxima": [e.position for e in ext if e.kind == "maximum"],
    }
    files.append(write_json(out / "extrema.json", summary))
    return files, {"n_extrema": len(ext), "inflection": summary["inflection"]}


def _simulate_system(p: dict) -> tuple[DynamicalSystem, str]:
    sc = p["scenario"]
    if sc == "pendulum":
        pp = PendulumParams(float(p["mass"]), float(p["length"]), float(p["gravity"]),
                            float(p["damping"]), float(p["torque"]))
        return DynamicalSystem(pendulum_potential(pp), pp.damping, pp.inertia), "rad"
    if sc == "particle":
        pot = WashboardPotential(float(p["A"]), float(p["B"]), float(p["k"]))
        return DynamicalSystem(pot, float(p["damping"]), float(p["mass"])), "m"
    if sc == "rcsj":
        jp = JunctionParams.from_reduced(float(p["beta_c"]), float(p["i"]), float(p["i_ac"]),
                                         float(p["omega"]))
        return build_rcsj_system(jp).system, "rad"
    if sc == "brownian":
        pot = WashboardPotential(float(p["A"]), float(p["B"]), float(p["k"]))
        return DynamicalSystem(pot, float(p["damping"]), None,
                               k_boltzmann=float(p["kb"])), "length"
    raise UsageError(f"unknown scenario {sc!r}")


def cmd_simulate(p: dict, out: Path, fmt: str):
    if p["scenario"] == "brownian":
        if p["seed"] is None:
            raise UsageError("brownian runs need --seed")
        if p["temperature"] is None:
            raise UsageError("brownian runs need --temperature")
    try:
        system, xunit = _simulate_system(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    results: dict[str, Any] = {}
    if p["scenario"] == "brownian":
        cfg = _sim_config(p, int(p["seed"]), float(p["temperature"]))
        tr = simulate_langevin(system, cfg)
        cols, units, data = ["t", "x"], ["time", xunit], [tr.times, tr.positions]
    else:
        cfg = _sim_config(p)
        tr = simulate_deterministic(system, cfg)
        cols, units = ["t", "x", "v"], ["time", xunit, xunit + "/time"]
        data = [tr.times, tr.positions, tr.velocities]
    discard = float(p["discard"])
    results["mean_velocity"] = mean_velocity(tr, discard)
    results["state"] = classify_state(tr, system.potential.period, discard)
    if p["scenario"] == "rcsj":
        results["reduced_voltage"] = results["mean_velocity"]
        jp = JunctionParams.from_reduced(float(p["beta_c"]), float(p["i"]))
        results["mapping"] = build_rcsj_system(jp).mapping()
    files = [write_table(out / "trajectory", cols, units, data, {"scenario": p["scenario"]}, fmt)]
    return files, results


def cmd_ivcurve(p: dict, out: Path, fmt: str):
    biases = _bias_list(p)
    jp = JunctionParams.from_reduced(float(p["beta_c"]))
    curve = iv_curve(jp, biases, _sim_config(p), float(p["discard"]), bool(p["continuation"]))
    mapping = build_rcsj_system(jp).mapping()
    i, v = zip(*curve)
    f = write_table(out / "iv", ["i", "v"], ["I/Ic", "V/(Ic R)"], [i, v],
                    {"beta_c": float(p["beta_c"]), "mapping": mapping}, fmt)
    return [f], {"mapping": mapping, "n_points": len(curve)}


def cmd_shapiro(p: dict, out: Path, fmt: str):
    biases = _bias_list(p)
    omega = float(p["omega"])
    if not float(p["i_ac"]) > 0:
        raise UsageError("zero AC amplitude: use ivcurve")
    if not omega > 0:
        raise UsageError("--omega must be > 0")
    jp = JunctionParams.from_reduced(float(p["beta_c"]), 0.0, float(p["i_ac"]), omega)
    curve = shapiro_scenario(jp, _sim_config(p), biases, float(p["discard"]))
    plateaus = detect_plateaus(curve, omega, float(p["rel_tol"]), int(p["min_points"]))
    i, v = zip(*curve)
    files = [write_table(out / "iv", ["i", "v"], ["I/Ic", "V/(Ic R)"], [i, v],
                         {"beta_c": float(p["beta_c"]), "i_ac": float(p["i_ac"]),
                          "omega": omega}, fmt)]
    recs = [{"order": pl.order, "i_lo": pl.i_lo, "i_hi": pl.i_hi, "width": pl.width,
             "voltage": pl.voltage, "expected_voltage": pl.order * omega,
             "n_points": pl.n_points} for pl in plateaus]
    files.append(write_json(out / "plateaus.json", {"omega": omega, "plateaus": recs}))
    return files, {"n_plateaus": len(recs)}


def cmd_eigen(p: dict, out: Path, fmt: str):
    mode = p["mode"]
    n_grid = int(p["n_grid"])
    planck = None
    freq_unit = "1/time"
    energy_unit = "energy"
    if mode == "josephson":
        if p["i"] is None:
            raise UsageError("josephson mode needs --i")
        wp = josephson_well(float(p["i"]), float(p["ej_ec"]), n_grid)
        energy_unit = "E_J"
        planck, freq_unit = 1.0, "E_J/h"
        if p["ic"] is not None:
            e_j = junction_energies(JunctionParams(float(p["ic"]), 1.0, 1.0)).josephson_energy
            planck, freq_unit = H / e_j, "Hz"
    elif mode == "harmonic":
        m, w, hb = float(p["mass"]), float(p["omega"]), float(p["hbar"])
        half = float(p["half_width"])
        wp = WellProblem(lambda x: 0.5 * m * w * w * np.asarray(x) ** 2, m, (-half, half),
                         n_grid, hb)
    elif mode == "square":
        m, hb, width = float(p["mass"]), float(p["hbar"]), float(p["width"])
        wp = WellProblem(lambda x: np.zeros_like(np.asarray(x, dtype=float)), m, (0.0, width),
                         n_grid, hb, barrier=math.inf)
    else:
        raise UsageError(f"unknown eigen mode {mode!r}")
    spec = eigenlevels(wp, int(p["levels"]), float(p["rtol"]))
    spacings = level_spacings(spec, planck) if len(spec.levels) >= 2 else []
    d = spec.spacings
    report = {
        "mode": mode,
        "energy_unit": energy_unit,
        "frequency_unit": freq_unit,
        "levels": spec.levels,
        "count_bound": spec.count_bound,
        "truncated": spec.truncated,
        "edge_energy": spec.edge_energy,
        "spacings": [{"n": n, "delta_E": dE, "frequency": nu} for n, dE, nu in spacings],
        "spacings_decreasing": bool(len(d) >= 2 and np.all(np.diff(d) < 0)),
        "convergence": {"n_grid": spec.n_grid, "max_rel_change": spec.max_rel_change,
                        "rtol": float(p["rtol"]), "converged": True},
    }
    return [write_json(out / "spectrum.json", report)], {
        "count_bound": spec.count_bound, "spacings_decreasing": report["spacings_decreasing"]}


def _curve(spec) -> PolarizabilityCurve:
    if isinstance(spec, dict):
        return PolarizabilityCurve(tuple(tuple(map(float, t)) for t in spec.get("terms", ())),
                                   float(spec.get("offset", 0.0)))
    return PolarizabilityCurve(tuple(tuple(map(float, t)) for t in spec))


def cmd_optics(p: dict, out: Path, fmt: str):
    sc = p["scenario"]
    n = int(p["n"])
    if n < 3:
        raise UsageError("--n must be >= 3")
    results: dict[str, Any] = {}
    try:
        if sc == "gaussian":
            gb = GaussianBeam(float(p["intensity"]), float(p["waist"]))
            r = np.linspace(0.0, float(p["r_max"]), n)
            f = write_table(out / "gaussian", ["r", "I"], ["m", "W/m^2"],
                            [r, gaussian_intensity(gb, r)], {"waist": gb.waist}, fmt)
            return [f], results
        if sc in ("bessel-transverse", "bessel-axial"):
            z_max = (float(p["z_max"]) if p["z_max"] is not None
                     else ring_slit_zmax(float(p["R"]), float(p["f"]), float(p["d"])))
            theta = (float(p["cone_angle"]) if p["cone_angle"] is not None
                     else math.atan(float(p["d"]) / (2.0 * float(p["f"]))))
            bs = BesselBeamSetup(float(p["wavelength"]), theta, float(p["intensity"]), z_max,
                                 float(p["residual"]),
                                 float(p["residual_waist"]) if p["residual_waist"] else None)
            meta = {"z_max": z_max, "cone_angle": theta, "k_r": bs.radial_wavenumber}
            results.update(meta)
            if sc == "bessel-transverse":
                r = np.linspace(-float(p["r_max"]), float(p["r_max"]), n)
                z = float(p["z"])
                f = write_table(out / "bessel_transverse", ["r", "I"], ["m", "W/m^2"],
                                [r, bessel_beam_intensity(bs, r, np.full_like(r, z))],
                                meta | {"z": z}, fmt)
                return [f], results
            z = np.linspace(0.0, 1.5 * z_max, n)
            vals = bessel_beam_intensity(bs, np.zeros_like(z), z)
            j = int(np.argmax(vals))
            lo, hi = z[max(j - 1, 0)], z[min(j + 1, n - 1)]
            res = minimize_scalar(lambda zz: -bessel_beam_intensity(bs, 0.0, zz),
                                  bracket=(lo, z[j], hi) if 0 < j < n - 1 else None,
                                  method="golden", tol=1e-10)
            results.update({"peak_z_grid": float(z[j]), "peak_z": float(res.x),
                            "peak_z_expected": z_max / 2.0})
            f = write_table(out / "bessel_axial", ["z", "I"], ["m", "W/m^2"], [z, vals],
                            meta | {"peak_z": float(res.x)}, fmt)
            return [f], results
        if sc == "lattice":
            lam = float(p["wavelength"])
            depth = (float(p["depth"]) if p["depth"] is not None else
                     float(dipole_potential_depth(float(p["alpha"]), float(p["intensity"]))))
            env = float(p["envelope_waist"]) if p["envelope_waist"] is not None else None
            lp = LatticeParams.from_wavelength(depth, lam, env)
            period = lattice_period(lam)
            x = np.linspace(-float(p["periods"]) * period, float(p["periods"]) * period, n)
            meta = {"period": period, "depth": depth, "wavelength": lam,
                    "envelope_waist": env}
            results.update(meta)
            files = [write_table(out / "lattice", ["x", "U"], ["m", "J"],
                                 [x, lp.evaluate(x)], meta, fmt)]
            xa, ua = antinode_values(lp, max(1, int(p["periods"])))
            files.append(write_table(out / "antinodes", ["x", "U"], ["m", "J"], [xa, ua],
                                     meta, fmt))
            return files, results
        if sc == "magic":
            a1, a2 = _curve(p["curve1"]), _curve(p["curve2"])
            lo, hi = _floats(p["bracket"])
            lam = magic_wavelength(a1, a2, (lo, hi))
            v1, v2 = a1(lam), a2(lam)
            results.update({"wavelength": lam, "residual": abs(v1 - v2)})
            f = write_json(out / "magic.json", {"wavelength": lam, "alpha1": v1, "alpha2": v2,
                                                "residual": abs(v1 - v2),
                                                "bracket": [lo, hi]})
            return [f], results
    except BracketError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown optics scenario {sc!r}")


# --- parameter tables -------------------------------------------------------

_SIM = {"dt": None, "t_end": None, "x0": 0.0, "v0": 0.0, "stride": 1, "discard": 0.5}

COMMANDS: dict[str, tuple[Callable, dict]] = {
    "potential": (cmd_potential, {
        "A": 0.1, "B": 1.0, "k": 1.0, "phi0": 0.0, "ratio": None, "josephson": False,
        "i": None, "range": "0:25", "n": 1000}),
    "simulate": (cmd_simulate, _SIM | {
        "scenario": "pendulum", "mass": 1.0, "length": 1.0, "gravity": 9.81, "torque": 0.0,
        "damping": 0.0, "A": 0.0, "B": 1.0, "k": 1.0, "beta_c": 0.01, "i": 0.5,
        "i_ac": 0.0, "omega": 0.0, "temperature": None, "kb": 1.0, "seed": None}),
    "ivcurve": (cmd_ivcurve, _SIM | {
        "dt": 0.005, "t_end": 4000.0, "stride": 10, "beta_c": 0.01, "biases": None,
        "i_start": 0.0, "i_stop": 2.0, "i_step": 0.1, "continuation": False}),
    "shapiro": (cmd_shapiro, _SIM | {
        "dt": 0.01, "t_end": 1200.0, "stride": 10, "beta_c": 0.01, "i_ac": 0.8, "omega": 0.5,
        "biases": None, "i_start": 0.0, "i_stop": 1.6, "i_step": 0.01, "rel_tol": 0.02,
        "min_points": 3}),
    "eigen": (cmd_eigen, {
        "mode": "josephson", "i": None, "ej_ec": 1.0e4, "ic": None, "levels": 6,
        "n_grid": 256, "rtol": 1e-4, "mass": 1.0, "omega": 1.0, "hbar": 1.0,
        "half_width": 10.0, "width": 1.0}),
    "optics": (cmd_optics, {
        "scenario": "gaussian", "n": 1001, "intensity": 1.0, "waist": 1e-3, "r_max": 3e-3,
        "wavelength": 670e-9, "R": 8.75e-3, "f": 0.1, "d": 2.5e-3, "z_max": None,
        "cone_angle": None, "residual": 0.0, "residual_waist": None, "z": 0.1,
        "depth": None, "alpha": 1e-39, "envelope_waist": None, "periods": 5,
        "curve1": [[1.0, 500e-9]], "curve2": [[0.5, 700e-9]], "bracket": "8e-7,1e-5"}),
}

_SIM_DEFAULTS = {
    "pendulum": {"dt": 0.001, "t_end": 10.0},
    "particle": {"dt": 0.001, "t_end": 10.0},
    "rcsj": {"dt": 0.005, "t_end": 2000.0, "stride": 10},
    "brownian": {"dt": 0.001, "t_end": 10.0, "damping": 1.0},
}

_FLAG_TYPES: dict[str, Callable] = {"n": int, "stride": int, "levels": int, "n_grid": int,
                                    "min_points": int, "periods": int, "seed": int}
_STR_KEYS = {"range", "biases", "bracket", "scenario", "mode"}
_BOOL_KEYS = {"josephson", "continuation"}
_JSON_KEYS = {"curve1", "curve2"}
_CHOICES = {
    ("simulate", "scenario"): ["pendulum", "particle", "rcsj", "brownian"],
    ("eigen", "mode"): ["josephson", "harmonic", "square"],
    ("optics", "scenario"): ["gaussian", "bessel-transverse", "bessel-axial", "lattice", "magic"],
}


def _flag(key: str) -> str:
    return "--" + key.replace("_", "-")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", default=argparse.SUPPRESS, help="output directory")
    common.add_argument("--config", default=argparse.SUPPRESS, help="JSON config or manifest")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=["csv", "json"], default=argparse.SUPPRESS)

    parser = _Parser(prog="washboard", description="Tilted washboard potential simulations.", parents=[common])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, defaults) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common])
        for key in defaults:
            if key == "seed":
                continue
            kw: dict[str, Any] = {"dest": key, "default": argparse.SUPPRESS}
            if key in _BOOL_KEYS:
                sp.add_argument(_flag(key), action="store_true", **kw)
                continue
            if (name, key) in _CHOICES:
                kw["choices"] = _CHOICES[(name, key)]
            elif key in _JSON_KEYS:
                kw["type"] = json.loads
            elif key in _STR_KEYS:
                kw["type"] = str
            else:
                kw["type"] = _FLAG_TYPES.get(key, float)
            flags = [_flag(key)]
            if key == "scenario":
                sp.add_argument("scenario_pos", nargs="?", default=argparse.SUPPRESS,
                                metavar="SCENARIO")
            sp.add_argument(*flags, **kw)
    rp = sub.add_parser("replay", parents=[common], help="re-run a manifest")
    rp.add_argument("manifest")
    return parser


def _load_config(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("config must be a JSON object")
    return data


def resolve(command: str, cli: dict) -> tuple[dict, dict]:
    """Merge defaults, config file and explicit flags; returns (params, shared)."""
    defaults = dict(COMMANDS[command][1])
    shared = {"out": ".", "format": "csv", "seed": None}
    cfg: dict = {}
    if "config" in cli:
        cfg = _load_config(cli["config"])
        if "subcommand" in cfg:
            if cfg["subcommand"] != command:
                raise UsageError(f"manifest is for {cfg['subcommand']!r}, not {command!r}")
            cfg = dict(cfg.get("params", {}))
    for src in (cfg, cli):
        for key, val in src.items():
            if key in ("config", "command", "manifest"):
                continue
            if key == "scenario_pos":
                key = "scenario"
            if key in ("out", "format"):
                shared[key] = val
            elif key in defaults or key == "seed":
                defaults[key] = val
            else:
                raise UsageError(f"unknown parameter {key!r} for {command}")
    shared["seed"] = defaults.get("seed")
    if command == "simulate":
        for key, val in _SIM_DEFAULTS.get(defaults["scenario"], {}).items():
            if key not in cfg and key not in cli:
                defaults[key] = val
    choices = _CHOICES.get((command, "scenario")) or _CHOICES.get((command, "mode"))
    for key in ("scenario", "mode"):
        if key in defaults and choices and defaults[key] not in choices:
            raise UsageError(f"{key} must be one of {', '.join(choices)}")
    if shared["format"] not in ("csv", "json"):
        raise UsageError("format must be csv or json")
    return defaults, shared


def run(command: str, params: dict, out: Path, fmt: str) -> dict:
    """Execute a resolved command and write its manifest; returns the manifest."""
    out.mkdir(parents=True, exist_ok=True)
    func = COMMANDS[command][0]
    t0 = time.perf_counter()
    files, results = func(params, out, fmt)
    manifest = {
        "subcommand": command,
        "params": params,
        "seed": params.get("seed"),
        "format": fmt,
        "version": __version__,
        "outputs": sorted(Path(f).name for f in files),
        "results": results,
        "duration_s": time.perf_counter() - t0,
    }
    write_json(out / "manifest.json", manifest)
    return manifest


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = vars(parser.parse_args(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    command = ns.pop("command")
    try:
        if command == "replay":
            man = _load_config(ns.pop("manifest"))
            command = man.get("subcommand")
            if command not in COMMANDS:
                raise UsageError("not a washboard manifest")
            params = dict(COMMANDS[command][1]) | man.get("params", {})
            fmt = ns.get("format", man.get("format", "csv"))
            out = Path(ns.get("out", "."))
        else:
            params, shared = resolve(command, ns)
            if command != "simulate" and "seed" in params:
                params.pop("seed")
            fmt, out = shared["format"], Path(shared["out"])
        run(command, params, out, fmt)
    except (UsageError, BracketError) as exc:
        print(f"washboard {command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (IntegrationError, SweepError, ConvergenceError, NumericalFailure) as exc:
        print(f"washboard {command}: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
