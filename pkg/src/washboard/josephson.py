"""RCSJ (Stewart-McCumber) Josephson junction on its phase washboard.

Physical inputs are SI.  Dynamics run in reduced units: time in
``hbar/(2 e Ic R)``, current in ``Ic``, voltage in ``Ic R``, so that

    beta_c phi'' + phi' + sin(phi) = i + i_ac sin(Omega tau)

with ``beta_c = 2 e Ic R^2 C / hbar``.  The mean phase velocity then equals the
reduced dc voltage ``<V>/(Ic R)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .constants import CODATA, PhysConstants
from .core import WashboardPotential, well_minimum
from .dynamics import (ACDrive, DynamicalSystem, IntegrationError, SimConfig, Trajectory,
                       mean_velocity, simulate_deterministic)


def voltage_from_phase_rate(dphi_dt, constants: PhysConstants = CODATA):
    """V = (hbar/2e) dphi/dt."""
    return constants.reduced_flux_quantum * dphi_dt


def josephson_frequency(voltage, constants: PhysConstants = CODATA):
    """f_J = (2e/h) V."""
    return constants.josephson_const * voltage


@dataclass(frozen=True)
class JunctionParams:
    critical_current: float
    resistance: float
    capacitance: float
    bias: float = 0.0
    ac_amplitude: float = 0.0
    ac_frequency: float = 0.0

    def __post_init__(self) -> None:
        if not (self.critical_current > 0 and self.resistance > 0 and self.capacitance > 0):
            raise ValueError("critical current, resistance and capacitance must be positive")
        if self.ac_amplitude < 0 or self.ac_frequency < 0:
            raise ValueError("ac amplitude and frequency must be >= 0")

    def beta_c(self, constants: PhysConstants = CODATA) -> float:
        phi = constants.reduced_flux_quantum
        return self.critical_current * self.resistance**2 * self.capacitance / phi

    @classmethod
    def from_reduced(cls, beta_c: float, i: float = 0.0, i_ac: float = 0.0,
                     omega: float = 0.0, critical_current: float = 1e-6,
                     resistance: float = 10.0,
                     constants: PhysConstants = CODATA) -> JunctionParams:
        """Junction with a prescribed beta_c and reduced bias/drive, fixing Ic and R."""
        phi = constants.reduced_flux_quantum
        cap = beta_c * phi / (critical_current * resistance**2)
        time_unit = phi / (critical_current * resistance)
        return cls(critical_current, resistance, cap, i * critical_current,
                   i_ac * critical_current, omega / (2.0 * math.pi * time_unit))


@dataclass(frozen=True)
class JunctionEnergies:
    josephson_energy: float
    charging_energy: float
    ratio: float
    mass: float
    well_frequency: float | None


def junction_energies(jp: JunctionParams, constants: PhysConstants = CODATA) -> JunctionEnergies:
    """E_J = (hbar/2e) Ic, E_C = 2 e^2 / C, phase mass C (hbar/2e)^2.

    ``well_frequency`` is the small-oscillation frequency at the bottom of the
    biased well, or None when ``|I| >= Ic`` leaves no well.
    """
    phi = constants.reduced_flux_quantum
    e_j = phi * jp.critical_current
    e_c = 2.0 * constants.e**2 / jp.capacitance
    mass = jp.capacitance * phi**2
    nu0 = None
    i = jp.bias / jp.critical_current
    if abs(i) < 1.0:
        pot = washboard_of(jp, constants)
        curv = pot.curvature(well_minimum(pot))
        nu0 = math.sqrt(curv / mass) / (2.0 * math.pi)
    return JunctionEnergies(e_j, e_c, e_j / e_c, mass, nu0)


def washboard_of(jp: JunctionParams, constants: PhysConstants = CODATA) -> WashboardPotential:
    """U(phi) = (hbar/2e)(-I phi - Ic cos phi), in joules."""
    phi = constants.reduced_flux_quantum
    return WashboardPotential(phi * jp.bias, phi * jp.critical_current, 1.0, 0.0)


@dataclass(frozen=True)
class RCSJModel:
    """Reduced-unit RCSJ system plus the constants that map it back to SI."""

    system: DynamicalSystem
    beta_c: float
    bias: float
    ac_amplitude: float
    ac_omega: float
    time_unit: float
    voltage_unit: float

    def physical_voltage(self, reduced_v):
        return reduced_v * self.voltage_unit

    def mapping(self) -> dict:
        return {"beta_c": self.beta_c, "i": self.bias, "i_ac": self.ac_amplitude,
                "omega": self.ac_omega, "time_unit_s": self.time_unit,
                "voltage_unit_V": self.voltage_unit}


def build_rcsj_system(jp: JunctionParams, constants: PhysConstants = CODATA) -> RCSJModel:
    phi = constants.reduced_flux_quantum
    time_unit = phi / (jp.critical_current * jp.resistance)
    beta_c = jp.beta_c(constants)
    i = jp.bias / jp.critical_current
    i_ac = jp.ac_amplitude / jp.critical_current
    omega = 2.0 * math.pi * jp.ac_frequency * time_unit
    drive = ACDrive(i_ac, omega) if i_ac > 0 else None
    system = DynamicalSystem(WashboardPotential(i, 1.0), damping=1.0, inertia=beta_c,
                             drive=drive, k_boltzmann=1.0)
    return RCSJModel(system, beta_c, i, i_ac, omega, time_unit,
                     jp.critical_current * jp.resistance)


class SweepError(RuntimeError):
    def __init__(self, bias: float, cause: Exception):
        self.bias = bias
        super().__init__(f"integration failed at bias i={bias}: {cause}")


def _run_bias(jp: JunctionParams, i: float, cfg: SimConfig, discard: float,
              constants: PhysConstants) -> tuple[float, Trajectory]:
    model = build_rcsj_system(replace(jp, bias=i * jp.critical_current), constants)
    try:
        tr = simulate_deterministic(model.system, cfg)
    except IntegrationError as exc:
        raise SweepError(i, exc) from exc
    return mean_velocity(tr, discard), tr


def _sweep(jp, biases, cfg, discard, continuation, constants, start=None):
    out = []
    x0, v0 = start if start is not None else (cfg.x0, cfg.v0)
    tr = None
    for i in biases:
        v, tr = _run_bias(jp, i, replace(cfg, x0=x0, v0=v0), discard, constants)
        out.append((i, v))
        if continuation:
            x0, v0 = float(tr.positions[-1]), float(tr.velocities[-1])
    return out, (float(tr.positions[-1]), float(tr.velocities[-1]))


def iv_curve(jp: JunctionParams, bias_list, cfg: SimConfig, discard_fraction: float = 0.5,
             continuation: bool = False,
             constants: PhysConstants = CODATA) -> list[tuple[float, float]]:
    """Reduced dc voltage ``v = <phi'>`` for each reduced bias ``i = I/Ic``.

    Each point starts from ``(cfg.x0, cfg.v0)`` unless ``continuation`` is set,
    in which case it starts from the final state of the previous point, as in a
    slow experimental sweep.  Any AC drive on ``jp`` is kept.
    """
    biases = [float(b) for b in bias_list]
    if not biases:
        raise ValueError("bias_list is empty")
    return _sweep(jp, biases, cfg, discard_fraction, continuation, constants)[0]


@dataclass(frozen=True)
class HysteresisResult:
    up: list[tuple[float, float]]
    down: list[tuple[float, float]]
    switching_current: float
    retrapping_current: float


def hysteresis_loop(jp: JunctionParams, biases_up, cfg: SimConfig,
                    zero_voltage_tol: float = 1e-3,
                    discard_fraction: float = 0.5,
                    constants: PhysConstants = CODATA) -> HysteresisResult:
    """Continuation sweep up through ``biases_up`` and back down again.

    Both transition currents are reported on the zero-voltage side of the
    jump: the switching current is the last up-sweep bias still in the
    superconducting state, the retrapping current the first down-sweep bias
    back in it.  NaN marks a sweep that never changes state.
    """
    up_biases = sorted(float(b) for b in biases_up)
    if len(up_biases) < 2:
        raise ValueError("need at least two bias points")
    up, end_state = _sweep(jp, up_biases, cfg, discard_fraction, True, constants)
    down, _ = _sweep(jp, up_biases[::-1][1:], cfg, discard_fraction, True, constants,
                     start=end_state)
    down = [up[-1]] + down

    def zero(v):
        return abs(v) < zero_voltage_tol

    switching = math.nan
    for (i, v), (_, v_next) in zip(up, up[1:]):
        if zero(v) and not zero(v_next):
            switching = i
            break
    retrapping = math.nan
    for (_, v_prev), (i, v) in zip(down, down[1:]):
        if zero(v) and not zero(v_prev):
            retrapping = i
            break
    return HysteresisResult(up, down, switching, retrapping)


def shapiro_scenario(jp: JunctionParams, cfg: SimConfig, dc_sweep,
                     discard_fraction: float = 0.5,
                     constants: PhysConstants = CODATA) -> list[tuple[float, float]]:
    """I-V sweep of an AC-driven junction; phase-locked points sit at v = n Omega."""
    if not jp.ac_amplitude > 0:
        raise ValueError("zero AC amplitude: use iv_curve")
    if not jp.ac_frequency > 0:
        raise ValueError("AC frequency must be > 0")
    return iv_curve(jp, dc_sweep, cfg, discard_fraction, False, constants)


@dataclass(frozen=True)
class Plateau:
    order: int
    i_lo: float
    i_hi: float
    voltage: float
    n_points: int

    @property
    def width(self) -> float:
        return self.i_hi - self.i_lo


def detect_plateaus(sweep, omega: float, rel_tol: float = 0.02,
                    min_points: int = 3) -> list[Plateau]:
    """Maximal runs of consecutive sweep points with ``|v - n omega| < rel_tol omega``.

    Only orders ``n >= 1`` count and a run needs ``min_points`` points.
    """
    if not omega > 0:
        raise ValueError("omega must be > 0")
    pts = sorted((float(i), float(v)) for i, v in sweep)
    labels = []
    for _, v in pts:
        n = round(v / omega)
        labels.append(n if n >= 1 and abs(v - n * omega) < rel_tol * omega else None)
    out = []
    j = 0
    while j < len(pts):
        n = labels[j]
        k = j
        while k + 1 < len(pts) and n is not None and labels[k + 1] == n:
            k += 1
        if n is not None and k - j + 1 >= min_points:
            vs = [v for _, v in pts[j:k + 1]]
            out.append(Plateau(n, pts[j][0], pts[k][0], float(np.mean(vs)), k - j + 1))
        j = k + 1
    return out
