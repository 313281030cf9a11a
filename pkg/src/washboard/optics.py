"""Laser intensity profiles and the dipole potentials they create.

Covers Gaussian and zeroth-order Bessel beams (ring-slit generation, optional
Gaussian residual that tilts the ring pattern), 1-D standing-wave lattices with
an optional Gaussian envelope, and magic-wavelength search between two
polarizability curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.interpolate import PchipInterpolator

from .constants import C_LIGHT, EPS0
from .core import WashboardPotential

# --- Bessel J0 ------------------------------------------------------------

_SERIES_LIMIT = 12.0


def _j0_series(x: float) -> float:
    q = -0.25 * x * x
    term = 1.0
    total = 1.0
    m = 0
    while True:
        m += 1
        term *= q / (m * m)
        total += term
        if abs(term) < 1e-17 * max(abs(total), 1e-3) and m > 4:
            return total


def _j0_asymptotic(x: float) -> float:
    # Hankel expansion: J0 = sqrt(2/(pi x)) (P cos(x - pi/4) - Q sin(x - pi/4))
    inv8x = 1.0 / (8.0 * x)
    p = 1.0
    q = 0.0
    term = 1.0
    prev = math.inf
    k = 0
    while True:
        k += 1
        # a_k(0) = prod_{j=1..k} (-(2j-1)^2) / (k! (8x)^k)
        term *= -((2 * k - 1) ** 2) * inv8x / k
        if abs(term) >= prev or abs(term) < 1e-17:
            break
        prev = abs(term)
        signed = -term if (k // 2) % 2 else term
        if k % 2:
            q += signed
        else:
            p += signed
    chi = x - 0.25 * math.pi
    return math.sqrt(2.0 / (math.pi * x)) * (p * math.cos(chi) - q * math.sin(chi))


def _j0_scalar(x: float) -> float:
    x = abs(x)
    if x <= _SERIES_LIMIT:
        return _j0_series(x)
    return _j0_asymptotic(x)


def bessel_j0(x):
    """Zeroth-order Bessel function of the first kind.

    Power series up to |x| = 12, Hankel asymptotic expansion beyond, truncated
    at its smallest term.  Absolute error stays below 1e-10 for |x| <= 50.
    """
    if np.ndim(x) == 0:
        return _j0_scalar(float(x))
    arr = np.asarray(x, dtype=float)
    return np.vectorize(_j0_scalar, otypes=[float])(arr)


# --- beams ----------------------------------------------------------------


@dataclass(frozen=True)
class GaussianBeam:
    peak_intensity: float
    waist: float

    def __post_init__(self) -> None:
        if self.peak_intensity < 0 or not self.waist > 0:
            raise ValueError("need peak_intensity >= 0 and waist > 0")


def gaussian_intensity(gb: GaussianBeam, r):
    r = np.asarray(r, dtype=float) if np.ndim(r) else float(r)
    return gb.peak_intensity * np.exp(-2.0 * r**2 / gb.waist**2)


def ring_slit_zmax(R: float, f: float, d: float) -> float:
    """Axial extent 2 R f / d of the Bessel region behind a ring slit and lens."""
    if not (R > 0 and f > 0 and d > 0):
        raise ValueError("R, f and d must be positive")
    return 2.0 * R * f / d


@dataclass(frozen=True)
class BesselBeamSetup:
    wavelength: float
    cone_angle: float
    peak_intensity: float
    z_max: float
    residual_fraction: float = 0.0
    residual_waist: float | None = None

    def __post_init__(self) -> None:
        if not self.wavelength > 0:
            raise ValueError("wavelength must be > 0")
        if not 0 < self.cone_angle < math.pi / 2:
            raise ValueError("cone angle must lie in (0, pi/2)")
        if not self.z_max > 0:
            raise ValueError("z_max must be > 0")
        if self.residual_fraction < 0:
            raise ValueError("residual_fraction must be >= 0")
        if self.residual_fraction > 0 and not (self.residual_waist and self.residual_waist > 0):
            raise ValueError("a Gaussian residual needs a positive waist")

    @property
    def radial_wavenumber(self) -> float:
        return 2.0 * math.pi / self.wavelength * math.sin(self.cone_angle)


def bessel_beam_intensity(bs: BesselBeamSetup, r, z):
    """I0 (z/z_max) exp(-2 z^2/z_max^2) J0^2(k_r r), plus the Gaussian residual if set.

    The residual ``g I0 exp(-2 r^2/w^2)`` is added independently of ``z``.
    """
    scalar = np.ndim(r) == 0 and np.ndim(z) == 0
    r = np.asarray(r, dtype=float)
    z = np.asarray(z, dtype=float)
    if np.any(z < 0):
        raise ValueError("z must be >= 0")
    zr = z / bs.z_max
    out = bs.peak_intensity * zr * np.exp(-2.0 * zr**2) * bessel_j0(bs.radial_wavenumber * r) ** 2
    if bs.residual_fraction > 0:
        out = out + bs.residual_fraction * bs.peak_intensity * np.exp(
            -2.0 * r**2 / bs.residual_waist**2)
    return float(out) if scalar else out


def ring_maxima(values: np.ndarray, r: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Local maxima of a sampled radial profile, including r = 0 if it peaks there."""
    v = np.asarray(values)
    idx = [j for j in range(1, len(v) - 1) if v[j] > v[j - 1] and v[j] >= v[j + 1]]
    if len(v) > 1 and v[0] > v[1]:
        idx = [0] + idx
    idx = np.array(idx, dtype=int)
    return np.asarray(r)[idx], v[idx]


# --- dipole potentials and lattices --------------------------------------


def dipole_potential_depth(alpha, intensity):
    """U0 = -Re(alpha) I / (2 c eps0); alpha in C m^2/V, intensity in W/m^2."""
    if np.any(np.asarray(intensity) < 0):
        raise ValueError("intensity must be >= 0")
    return -np.real(alpha) * intensity / (2.0 * C_LIGHT * EPS0)


@dataclass(frozen=True)
class LatticeParams:
    """U(x) = U0 sin^2(k x), times exp(-2 x^2/w^2) when ``envelope_waist`` is set."""

    depth: float
    wavenumber: float
    envelope_waist: float | None = None

    def __post_init__(self) -> None:
        if not self.wavenumber > 0:
            raise ValueError("wavenumber must be > 0")
        if self.envelope_waist is not None and not self.envelope_waist > 0:
            raise ValueError("envelope waist must be > 0")

    @classmethod
    def from_wavelength(cls, depth: float, wavelength: float,
                        envelope_waist: float | None = None) -> LatticeParams:
        return cls(depth, 2.0 * math.pi / wavelength, envelope_waist)

    def evaluate(self, x):
        x = np.asarray(x, dtype=float)
        u = self.depth * np.sin(self.wavenumber * x) ** 2
        if self.envelope_waist is not None:
            u = u * np.exp(-2.0 * x**2 / self.envelope_waist**2)
        return u

    def force(self, x):
        x = np.asarray(x, dtype=float)
        k = self.wavenumber
        f = -self.depth * k * np.sin(2.0 * k * x)
        if self.envelope_waist is not None:
            w2 = self.envelope_waist**2
            g = np.exp(-2.0 * x**2 / w2)
            f = f * g + self.depth * np.sin(k * x) ** 2 * (4.0 * x / w2) * g
        return f

    def describe(self) -> dict:
        return {"kind": "lattice", "depth": self.depth, "wavenumber": self.wavenumber,
                "envelope_waist": self.envelope_waist}


def lattice_potential(lp: LatticeParams, x):
    return lp.evaluate(x)


def lattice_period(wavelength: float, geometry: str = "counter-propagating") -> float:
    if not wavelength > 0:
        raise ValueError("wavelength must be > 0")
    if geometry != "counter-propagating":
        raise ValueError(f"unsupported lattice geometry {geometry!r}")
    return wavelength / 2.0


def antinode_values(lp: LatticeParams, n_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Potential at the antinodes x = (2 j + 1) pi / (2 k), j = -n_max..n_max-1."""
    j = np.arange(-n_max, n_max)
    x = (2 * j + 1) * math.pi / (2.0 * lp.wavenumber)
    return x, lp.evaluate(x)


@dataclass(frozen=True)
class LatticeWashboard:
    """Washboard form of an envelope-free lattice: U_lattice = potential + offset."""

    potential: WashboardPotential
    offset: float


def lattice_to_washboard(lp: LatticeParams) -> LatticeWashboard:
    """Rewrite U0 sin^2(k x) as U0/2 - (U0/2) cos(2 k x).

    The amplitude must be non-negative, so an attractive lattice (U0 < 0) is
    expressed with a pi phase offset instead of a negative amplitude.
    """
    if lp.envelope_waist is not None:
        raise ValueError("no exact washboard form for an enveloped lattice")
    u0 = lp.depth
    pot = WashboardPotential(0.0, abs(u0) / 2.0, 2.0 * lp.wavenumber,
                             0.0 if u0 >= 0 else math.pi)
    return LatticeWashboard(pot, u0 / 2.0)


# --- polarizability and magic wavelength ---------------------------------


@dataclass(frozen=True)
class PolarizabilityCurve:
    """alpha(lambda) = offset + sum_j c_j / (lambda_j^-2 - lambda^-2), or a tabulation.

    Tabulated curves (``samples``) are interpolated with a shape-preserving
    monotone cubic between samples.
    """

    terms: tuple[tuple[float, float], ...] = ()
    offset: float = 0.0
    samples: tuple[tuple[float, float], ...] | None = None
    _interp: PchipInterpolator | None = field(default=None, init=False, repr=False,
                                              compare=False)

    def __post_init__(self) -> None:
        if self.samples is not None:
            lam, val = np.array(sorted(self.samples)).T
            if len(lam) < 2 or np.any(np.diff(lam) <= 0):
                raise ValueError("tabulated curve needs >= 2 distinct wavelengths")
            object.__setattr__(self, "_interp", PchipInterpolator(lam, val, extrapolate=False))

    @classmethod
    def tabulated(cls, wavelengths: Sequence[float], values: Sequence[float]) -> PolarizabilityCurve:
        return cls(samples=tuple(zip(map(float, wavelengths), map(float, values))))

    def __call__(self, wavelength):
        lam = np.asarray(wavelength, dtype=float)
        if self._interp is not None:
            out = self._interp(lam)
        else:
            out = np.full_like(lam, self.offset)
            for c, lam_j in self.terms:
                out = out + c / (lam_j**-2 - lam**-2)
        return float(out) if out.ndim == 0 else out


class BracketError(ValueError):
    pass


def magic_wavelength(alpha1: PolarizabilityCurve, alpha2: PolarizabilityCurve,
                     bracket: tuple[float, float], rtol: float = 1e-9,
                     n_scan: int = 64) -> float:
    """Wavelength in ``bracket`` where the two polarizabilities cross, by bisection."""
    lo, hi = map(float, bracket)
    if not 0 < lo < hi:
        raise BracketError("bracket must satisfy 0 < lo < hi")

    def diff(lam):
        return alpha1(lam) - alpha2(lam)

    grid = np.linspace(lo, hi, n_scan)
    vals = diff(grid)
    if not np.all(np.isfinite(vals)):
        raise BracketError("polarizability not finite on the bracket")
    signs = np.sign(vals)
    if np.all(signs == 0):
        raise BracketError("ambiguous bracket")
    nz = signs[signs != 0]
    changes = int(np.sum(nz[1:] != nz[:-1]))
    if changes == 0 and not np.any(signs == 0):
        raise BracketError("no crossing in bracket")
    if changes > 1 or np.sum(signs == 0) > 1:
        raise BracketError("ambiguous bracket")
    if np.any(signs == 0):
        return float(grid[np.argmax(signs == 0)])

    f_lo = diff(lo)
    while hi - lo > rtol * hi:
        mid = 0.5 * (lo + hi)
        f_mid = diff(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


#: reference magic wavelengths (m), for documentation; not computed here
MAGIC_WAVELENGTHS = {
    "Sr 5S0-5P1": 473.371e-9,
    "Yb 6S0-6P1": 1035.68e-9,
}
