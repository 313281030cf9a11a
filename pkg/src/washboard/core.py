"""Tilted washboard potentials U(x) = -A x - B cos(k x + phi0).

The same family covers the driven pendulum (k = 1, x = angle), a particle on a
corrugated ramp, the Josephson phase (k = 1) and 1-D optical lattices
(k = 2 * 2pi/lambda).  Positive ``A`` tilts the landscape downhill for
increasing ``x``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

ExtremumKind = Literal["minimum", "maximum", "inflection"]

#: relative distance of |A|/(B k) from 1 below which extrema are reported as inflections
INFLECTION_RTOL = 1e-9


class DegeneratePotentialError(ValueError):
    """Raised when a well-based quantity is requested on a potential with no wells."""


@dataclass(frozen=True)
class WashboardPotential:
    tilt: float
    amplitude: float
    wavenumber: float = 1.0
    phase_offset: float = 0.0

    def __post_init__(self) -> None:
        if not self.amplitude >= 0.0:
            raise ValueError(f"amplitude must be >= 0, got {self.amplitude}")
        if not self.wavenumber > 0.0:
            raise ValueError(f"wavenumber must be > 0, got {self.wavenumber}")
        for name in ("tilt", "amplitude", "wavenumber", "phase_offset"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.wavenumber

    @property
    def tilt_ratio(self) -> float:
        """|A| / (B k); wells exist only while this is below one."""
        bk = self.amplitude * self.wavenumber
        if bk == 0.0:
            return math.inf if self.tilt != 0.0 else 0.0
        return abs(self.tilt) / bk

    def has_wells(self) -> bool:
        return self.amplitude > 0.0 and self.tilt_ratio < 1.0 - INFLECTION_RTOL

    # Scalar inputs take the ``math`` path: the integrators call these in tight loops.
    def evaluate(self, x):
        A, B, k, p = self.tilt, self.amplitude, self.wavenumber, self.phase_offset
        if isinstance(x, (float, int)):
            return -A * x - B * math.cos(k * x + p)
        x = np.asarray(x, dtype=float)
        return -A * x - B * np.cos(k * x + p)

    def force(self, x):
        """-dU/dx."""
        A, B, k, p = self.tilt, self.amplitude, self.wavenumber, self.phase_offset
        if isinstance(x, (float, int)):
            return A - B * k * math.sin(k * x + p)
        x = np.asarray(x, dtype=float)
        return A - B * k * np.sin(k * x + p)

    def curvature(self, x):
        """d2U/dx2."""
        B, k, p = self.amplitude, self.wavenumber, self.phase_offset
        if isinstance(x, (float, int)):
            return B * k * k * math.cos(k * x + p)
        return B * k * k * np.cos(k * np.asarray(x, dtype=float) + p)

    def describe(self) -> dict:
        return {
            "kind": "washboard",
            "tilt": self.tilt,
            "amplitude": self.amplitude,
            "wavenumber": self.wavenumber,
            "phase_offset": self.phase_offset,
        }


@dataclass(frozen=True)
class Extremum:
    position: float
    value: float
    kind: ExtremumKind
    index: int


@dataclass(frozen=True)
class PendulumParams:
    """Damped pendulum on a pulley: bob mass ``m``, rod length ``L``, torque ``M g R``."""

    mass: float
    length: float
    gravity: float = 9.81
    damping: float = 0.0
    torque: float = 0.0

    def __post_init__(self) -> None:
        if not (self.mass > 0 and self.length > 0 and self.gravity > 0):
            raise ValueError("mass, length and gravity must be positive")
        if self.damping < 0:
            raise ValueError("damping must be >= 0")

    @property
    def inertia(self) -> float:
        return self.mass * self.length**2

    @classmethod
    def from_hanging_mass(cls, mass, length, hanging_mass, pulley_radius,
                          gravity=9.81, damping=0.0) -> PendulumParams:
        return cls(mass, length, gravity, damping, hanging_mass * gravity * pulley_radius)


def evaluate(p: WashboardPotential, x):
    return p.evaluate(x)


def force(p: WashboardPotential, x):
    return p.force(x)


def critical_tilt(p: WashboardPotential) -> float:
    """Tilt magnitude B k at which every well flattens into an inflection point."""
    return p.amplitude * p.wavenumber


def _n_range(lo: float, hi: float, base: float, step: float) -> range:
    # candidate integers n with base + n*step in [lo, hi], padded by one on each side
    n_lo = math.floor((lo - base) / step) - 1
    n_hi = math.ceil((hi - base) / step) + 1
    return range(n_lo, n_hi + 1)


def find_extrema(p: WashboardPotential, x_lo: float, x_hi: float,
                 rtol: float = INFLECTION_RTOL) -> list[Extremum]:
    """All stationary points in ``[x_lo, x_hi]`` from the closed form, sorted by position.

    Minima sit at ``k x + phi0 = arcsin(A/(B k)) + 2 pi n`` and maxima at
    ``pi - arcsin(A/(B k)) + 2 pi n``.  When ``|A| = B k`` (within ``rtol``) the
    pair merges into one horizontal inflection per period; a steeper tilt, or
    ``B = 0``, leaves no stationary points.
    """
    if not x_lo < x_hi:
        raise ValueError("x_lo must be < x_hi")
    A, B, k, phi0 = p.tilt, p.amplitude, p.wavenumber, p.phase_offset
    if B == 0.0:
        return []
    ratio = A / (B * k)
    step = 2.0 * math.pi / k

    if abs(1.0 - abs(ratio)) <= rtol:
        arg = math.copysign(math.pi / 2, ratio)
        families = [("inflection", (arg - phi0) / k)]
    elif abs(ratio) > 1.0:
        return []
    else:
        s = math.asin(ratio)
        families = [("minimum", (s - phi0) / k), ("maximum", (math.pi - s - phi0) / k)]

    out = []
    for kind, base in families:
        for n in _n_range(x_lo, x_hi, base, step):
            x = base + n * step
            if x_lo <= x <= x_hi:
                out.append(Extremum(x, float(p.evaluate(x)), kind, n))
    out.sort(key=lambda e: e.position)
    return out


def well_minimum(p: WashboardPotential, well_index: int = 0) -> float:
    if not p.has_wells():
        raise DegeneratePotentialError("degenerate-or-monotone potential")
    s = math.asin(p.tilt / (p.amplitude * p.wavenumber))
    return (s - p.phase_offset + 2.0 * math.pi * well_index) / p.wavenumber


def flanking_maxima(p: WashboardPotential, well_index: int = 0) -> tuple[float, float]:
    """Positions of the maxima immediately left and right of well ``well_index``."""
    x_min = well_minimum(p, well_index)
    s = math.asin(p.tilt / (p.amplitude * p.wavenumber))
    right = (math.pi - s - p.phase_offset + 2.0 * math.pi * well_index) / p.wavenumber
    while right <= x_min:
        right += p.period
    while right - p.period > x_min:
        right -= p.period
    return right - p.period, right


def barrier_height(p: WashboardPotential, well_index: int = 0) -> float:
    """Energy needed to leave well ``well_index`` over its downhill-side maximum."""
    x_min = well_minimum(p, well_index)
    left, right = flanking_maxima(p, well_index)
    # downhill is +x for positive tilt; both sides agree when A == 0
    x_max = right if p.tilt >= 0.0 else left
    return float(p.evaluate(x_max) - p.evaluate(x_min))


def pendulum_potential(pp: PendulumParams) -> WashboardPotential:
    """U(theta) = -tau theta - m g L cos(theta)."""
    return WashboardPotential(pp.torque, pp.mass * pp.gravity * pp.length, 1.0, 0.0)
