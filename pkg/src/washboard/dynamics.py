"""Deterministic and overdamped-stochastic motion on washboard landscapes.

Second-order systems obey ``M x'' + eta x' = F(x) + F_ac sin(w_ac t)`` and are
advanced with classical fixed-step RK4.  Overdamped systems obey
``eta dx = F(x) dt + sqrt(2 eta kB T) dW`` and are advanced with
Euler-Maruyama.

Noise comes from numpy's PCG64 generator seeded with ``[seed, trajectory_index]``
and numpy's ziggurat ``standard_normal`` transform, drawn in order one variate
per step.  Member ``j`` of an ensemble therefore sees the same noise whether it
is run alone or with others.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Any, Protocol

import numpy as np
from numba import njit

from .constants import K_B
from .core import WashboardPotential


class Potential(Protocol):
    def evaluate(self, x): ...

    def force(self, x): ...


class IntegrationError(RuntimeError):
    """Non-finite state during integration."""

    def __init__(self, step: int, message: str | None = None):
        self.step = step
        super().__init__(message or f"non-finite state at step {step}")


@dataclass(frozen=True)
class ACDrive:
    amplitude: float
    angular_frequency: float


@dataclass(frozen=True)
class DynamicalSystem:
    """``inertia=None`` selects the overdamped (first-order) form.

    ``k_boltzmann`` converts the temperature in ``SimConfig`` to energy units of
    the potential; set it to 1 for reduced units.
    """

    potential: Any
    damping: float
    inertia: float | None = None
    drive: ACDrive | None = None
    k_boltzmann: float = K_B

    def __post_init__(self) -> None:
        if self.damping < 0:
            raise ValueError("damping must be >= 0")
        if self.inertia is not None and not self.inertia > 0:
            raise ValueError("inertia must be > 0 for the second-order form")
        if self.inertia is None and not self.damping > 0:
            raise ValueError("overdamped form requires damping > 0")

    def total_force(self, x, t):
        f = self.potential.force(x)
        if self.drive is not None:
            f = f + self.drive.amplitude * math.sin(self.drive.angular_frequency * t)
        return f

    def energy(self, x, v):
        """Kinetic plus potential energy, 1/2 M v^2 + U(x)."""
        m = self.inertia if self.inertia is not None else 0.0
        return 0.5 * m * np.asarray(v) ** 2 + self.potential.evaluate(np.asarray(x))

    def describe(self) -> dict:
        pot = self.potential
        d = {
            "potential": pot.describe() if hasattr(pot, "describe") else repr(pot),
            "damping": self.damping,
            "inertia": self.inertia,
            "drive": asdict(self.drive) if self.drive is not None else None,
            "k_boltzmann": self.k_boltzmann,
        }
        return d


@dataclass(frozen=True)
class SimConfig:
    dt: float
    t_end: float
    x0: float = 0.0
    v0: float = 0.0
    sample_stride: int = 1
    seed: int | None = None
    temperature: float = 0.0

    def __post_init__(self) -> None:
        if not self.dt > 0:
            raise ValueError("dt must be > 0")
        if not self.t_end > self.dt:
            raise ValueError("t_end must exceed dt")
        if int(self.sample_stride) != self.sample_stride or self.sample_stride < 1:
            raise ValueError("sample_stride must be a positive integer")
        if self.temperature < 0:
            raise ValueError("temperature must be >= 0")
        if self.seed is not None and not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    @property
    def n_steps(self) -> int:
        # guard against t_end/dt landing a hair below an integer
        return int(math.floor(self.t_end / self.dt * (1.0 + 1e-12)))

    @property
    def n_samples(self) -> int:
        return self.n_steps // self.sample_stride + 1

    def sample_times(self) -> np.ndarray:
        return np.arange(self.n_samples) * (self.sample_stride * self.dt)


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    positions: np.ndarray
    velocities: np.ndarray | None
    metadata: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.times)


@dataclass(frozen=True)
class Ensemble:
    """Overdamped ensemble; ``positions`` has shape (n_trajectories, n_samples)."""

    times: np.ndarray
    positions: np.ndarray
    metadata: dict = field(default_factory=dict)


def _metadata(sys: DynamicalSystem, cfg: SimConfig, method: str) -> dict:
    return {"method": method, "config": asdict(cfg), "system": sys.describe()}


# --- second order ---------------------------------------------------------


@njit(cache=True)
def _rk4_washboard(x, v, dt, n_steps, stride, inv_m, eta,
                   A, Bk, k, phi0, f_ac, w_ac, xs, vs):
    xs[0] = x
    vs[0] = v
    h2 = 0.5 * dt
    for n in range(n_steps):
        t = n * dt
        th = t + h2
        t1 = (n + 1) * dt
        d_t = f_ac * math.sin(w_ac * t)
        d_h = f_ac * math.sin(w_ac * th)
        d_1 = f_ac * math.sin(w_ac * t1)

        a1 = (A - Bk * math.sin(k * x + phi0) - eta * v + d_t) * inv_m
        x2 = x + h2 * v
        v2 = v + h2 * a1
        a2 = (A - Bk * math.sin(k * x2 + phi0) - eta * v2 + d_h) * inv_m
        x3 = x + h2 * v2
        v3 = v + h2 * a2
        a3 = (A - Bk * math.sin(k * x3 + phi0) - eta * v3 + d_h) * inv_m
        x4 = x + dt * v3
        v4 = v + dt * a3
        a4 = (A - Bk * math.sin(k * x4 + phi0) - eta * v4 + d_1) * inv_m

        x = x + dt / 6.0 * (v + 2.0 * v2 + 2.0 * v3 + v4)
        v = v + dt / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
        if not (math.isfinite(x) and math.isfinite(v)):
            return n + 1
        if (n + 1) % stride == 0:
            j = (n + 1) // stride
            xs[j] = x
            vs[j] = v
    return -1


def _rk4_generic(sys: DynamicalSystem, x, v, dt, n_steps, stride, xs, vs) -> int:
    inv_m = 1.0 / sys.inertia
    eta = sys.damping
    fx = sys.total_force
    xs[0], vs[0] = x, v
    h2 = 0.5 * dt
    for n in range(n_steps):
        t = n * dt
        try:
            a1 = (fx(x, t) - eta * v) * inv_m
            x2, v2 = x + h2 * v, v + h2 * a1
            a2 = (fx(x2, t + h2) - eta * v2) * inv_m
            x3, v3 = x + h2 * v2, v + h2 * a2
            a3 = (fx(x3, t + h2) - eta * v3) * inv_m
            x4, v4 = x + dt * v3, v + dt * a3
            a4 = (fx(x4, (n + 1) * dt) - eta * v4) * inv_m
            x = x + dt / 6.0 * (v + 2.0 * v2 + 2.0 * v3 + v4)
            v = v + dt / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4)
        except OverflowError:
            return n + 1
        if not (math.isfinite(x) and math.isfinite(v)):
            return n + 1
        if (n + 1) % stride == 0:
            xs[(n + 1) // stride] = x
            vs[(n + 1) // stride] = v
    return -1


def simulate_deterministic(sys: DynamicalSystem, cfg: SimConfig) -> Trajectory:
    """Fixed-step RK4 integration of the second-order system."""
    if sys.inertia is None:
        raise ValueError("simulate_deterministic needs an inertia (second-order form)")
    n = cfg.n_samples
    xs = np.empty(n)
    vs = np.empty(n)
    x0, v0 = float(cfg.x0), float(cfg.v0)
    stride = int(cfg.sample_stride)
    if not (math.isfinite(x0) and math.isfinite(v0)):
        raise IntegrationError(0)
    pot = sys.potential
    if type(pot) is WashboardPotential:
        f_ac, w_ac = (sys.drive.amplitude, sys.drive.angular_frequency) if sys.drive else (0.0, 0.0)
        bad = _rk4_washboard(x0, v0, cfg.dt, cfg.n_steps, stride, 1.0 / sys.inertia,
                             sys.damping, pot.tilt, pot.amplitude * pot.wavenumber,
                             pot.wavenumber, pot.phase_offset, f_ac, w_ac, xs, vs)
    else:
        bad = _rk4_generic(sys, x0, v0, cfg.dt, cfg.n_steps, stride, xs, vs)
    if bad >= 0:
        raise IntegrationError(bad)
    return Trajectory(cfg.sample_times(), xs, vs, _metadata(sys, cfg, "rk4"))


# --- overdamped -----------------------------------------------------------

_NOISE_BLOCK = 4096


def _noise_streams(seed: int, n_traj: int, offset: int = 0) -> list[np.random.Generator]:
    return [np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, offset + j])))
            for j in range(n_traj)]


def _euler_maruyama(sys: DynamicalSystem, cfg: SimConfig, x0: np.ndarray,
                    streams: list[np.random.Generator] | None) -> np.ndarray:
    """Integrate every entry of ``x0`` in lockstep; returns (n_traj, n_samples)."""
    x = np.array(x0, dtype=float)
    n_traj = x.shape[0]
    stride = int(cfg.sample_stride)
    out = np.empty((n_traj, cfg.n_samples))
    out[:, 0] = x
    dt = cfg.dt
    step_scale = dt / sys.damping
    amp = math.sqrt(2.0 * sys.k_boltzmann * cfg.temperature * dt / sys.damping)
    noisy = streams is not None and amp > 0.0
    n_steps = cfg.n_steps
    block = None
    for n in range(n_steps):
        if noisy and n % _NOISE_BLOCK == 0:
            m = min(_NOISE_BLOCK, n_steps - n)
            block = np.stack([g.standard_normal(m) for g in streams])
        x = x + sys.total_force(x, n * dt) * step_scale
        if noisy:
            x = x + amp * block[:, n % _NOISE_BLOCK]
        if (n + 1) % stride == 0:
            if not np.all(np.isfinite(x)):
                raise IntegrationError(n + 1)
            out[:, (n + 1) // stride] = x
    if not np.all(np.isfinite(x)):
        raise IntegrationError(n_steps)
    return out


def _check_overdamped(sys: DynamicalSystem) -> None:
    if sys.inertia is not None:
        raise ValueError("overdamped form only")


def simulate_overdamped(sys: DynamicalSystem, cfg: SimConfig) -> Trajectory:
    """Noise-free Euler integration of eta x' = F(x) + drive."""
    _check_overdamped(sys)
    pos = _euler_maruyama(sys, cfg, np.array([float(cfg.x0)]), None)
    return Trajectory(cfg.sample_times(), pos[0], None, _metadata(sys, cfg, "euler"))


def simulate_langevin(sys: DynamicalSystem, cfg: SimConfig,
                      trajectory_index: int = 0) -> Trajectory:
    """Euler-Maruyama integration of the overdamped Langevin equation.

    At ``temperature == 0`` no variates are drawn and the result is bitwise
    equal to :func:`simulate_overdamped`.
    """
    _check_overdamped(sys)
    streams = None
    if cfg.temperature > 0:
        if cfg.seed is None:
            raise ValueError("stochastic run needs a seed")
        streams = _noise_streams(cfg.seed, 1, trajectory_index)
    pos = _euler_maruyama(sys, cfg, np.array([float(cfg.x0)]), streams)
    meta = _metadata(sys, cfg, "euler-maruyama")
    meta["trajectory_index"] = trajectory_index
    return Trajectory(cfg.sample_times(), pos[0], None, meta)


def simulate_langevin_ensemble(sys: DynamicalSystem, cfg: SimConfig, n_trajectories: int,
                               x0: np.ndarray | None = None) -> Ensemble:
    """``n_trajectories`` independent Langevin paths integrated together.

    ``x0`` optionally gives one start position per trajectory.
    """
    _check_overdamped(sys)
    if n_trajectories < 1:
        raise ValueError("n_trajectories must be >= 1")
    if x0 is None:
        x0 = np.full(n_trajectories, float(cfg.x0))
    x0 = np.asarray(x0, dtype=float)
    if x0.shape != (n_trajectories,):
        raise ValueError("x0 must have one entry per trajectory")
    streams = None
    if cfg.temperature > 0:
        if cfg.seed is None:
            raise ValueError("stochastic run needs a seed")
        streams = _noise_streams(cfg.seed, n_trajectories)
    pos = _euler_maruyama(sys, cfg, x0, streams)
    meta = _metadata(sys, cfg, "euler-maruyama")
    meta["n_trajectories"] = n_trajectories
    return Ensemble(cfg.sample_times(), pos, meta)


# --- observables ----------------------------------------------------------


def _tail(tr: Trajectory, discard_fraction: float) -> slice:
    if not 0.0 <= discard_fraction < 1.0:
        raise ValueError("discard_fraction must lie in [0, 1)")
    start = int(math.floor(len(tr.times) * discard_fraction))
    if len(tr.times) - start < 2:
        raise ValueError("fewer than two samples left after discarding the transient")
    return slice(start, None)


def mean_velocity(tr: Trajectory, discard_fraction: float = 0.5) -> float:
    """Average drift (x_last - x_first)/(t_last - t_first) over the retained tail."""
    s = _tail(tr, discard_fraction)
    t = tr.times[s]
    x = tr.positions[s]
    return float((x[-1] - x[0]) / (t[-1] - t[0]))


def classify_state(tr: Trajectory, well_width: float, discard_fraction: float = 0.5) -> str:
    """'trapped' if the retained tail spans less than one period ``well_width``."""
    x = tr.positions[_tail(tr, discard_fraction)]
    return "trapped" if float(np.max(x) - np.min(x)) < well_width else "running"


def total_energy(sys: DynamicalSystem, tr: Trajectory) -> np.ndarray:
    v = tr.velocities if tr.velocities is not None else np.zeros_like(tr.positions)
    return sys.energy(tr.positions, v)


def mean_squared_displacement(ens: Ensemble, max_lag: int) -> tuple[np.ndarray, np.ndarray]:
    """MSD averaged over trajectories and all time origins, for lags 1..max_lag samples."""
    x = ens.positions
    if not 1 <= max_lag < x.shape[1]:
        raise ValueError("max_lag must lie in [1, n_samples)")
    lags = np.arange(1, max_lag + 1)
    msd = np.array([np.mean((x[:, m:] - x[:, :-m]) ** 2) for m in lags])
    dt_sample = ens.times[1] - ens.times[0]
    return lags * dt_sample, msd


def msd_slope(lag_times: np.ndarray, msd: np.ndarray) -> float:
    """Least-squares slope of MSD against lag time through the origin."""
    return float(np.dot(lag_times, msd) / np.dot(lag_times, lag_times))
