"""Bound levels of a single washboard well and minimal qubit bookkeeping.

The stationary Schroedinger equation is discretised with the 3-point Laplacian
on a uniform grid with hard walls at the box edges, which gives a symmetric
tridiagonal Hamiltonian.  Josephson wells are solved in reduced units: energies
in E_J, phase as coordinate, unit mass and ``hbar_eff**2 = 2 E_C / E_J`` (with
``E_C = 2 e^2 / C``), which reproduces ``H / E_J = -(E_C/E_J) d2/dphi2 + u(phi)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .constants import HBAR, K_B, H
from .core import WashboardPotential, flanking_maxima

MIN_GRID = 64
MAX_GRID = 2**14
#: representative E_J/E_C for reduced-unit Josephson wells
REPRESENTATIVE_EJ_EC = 1.0e4


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class WellProblem:
    """One well on ``box = (lo, hi)`` with Dirichlet walls.

    ``potential`` is any vectorised callable U(x).  ``barrier`` is the energy
    below which a level counts as bound; by default the lower of the two wall
    values of U.  Pass ``math.inf`` for a true hard-wall box.
    """

    potential: Callable[[np.ndarray], np.ndarray]
    mass: float
    box: tuple[float, float]
    n_grid: int = 256
    hbar: float = HBAR
    barrier: float | None = None

    def __post_init__(self) -> None:
        lo, hi = self.box
        if not lo < hi:
            raise ValueError("box must satisfy lo < hi")
        if self.n_grid < MIN_GRID:
            raise ValueError(f"n_grid must be >= {MIN_GRID}")
        if not (self.mass > 0 and self.hbar > 0):
            raise ValueError("mass and hbar must be positive")
        x = np.linspace(lo, hi, 2049)
        u = np.asarray(self.potential(x), dtype=float)
        if not np.all(np.isfinite(u)):
            raise ValueError("potential is not finite on the box")
        inner = u[1:-1]
        n_min = int(np.sum((inner < u[:-2]) & (inner < u[2:])))
        if n_min > 1:
            raise ValueError("box contains more than one minimum")
        if min(u[0], u[-1]) < u.min():
            raise ValueError("box edges lie below the well bottom")

    @property
    def edge_energy(self) -> float:
        if self.barrier is not None:
            return self.barrier
        lo, hi = self.box
        return float(min(self.potential(np.array([lo]))[0], self.potential(np.array([hi]))[0]))

    def bottom(self) -> float:
        x = np.linspace(*self.box, 4097)
        return float(np.min(self.potential(x)))

    @classmethod
    def from_washboard(cls, p: WashboardPotential, mass: float, well_index: int = 0,
                       n_grid: int = 256, hbar: float = HBAR) -> WellProblem:
        """Well ``well_index`` of ``p`` boxed by its two flanking maxima."""
        box = flanking_maxima(p, well_index)
        return cls(p.evaluate, mass, box, n_grid, hbar)


def josephson_well(i: float, ej_over_ec: float = REPRESENTATIVE_EJ_EC,
                   n_grid: int = 256) -> WellProblem:
    """Reduced-unit well of the junction biased at ``i = I/Ic`` (energies in E_J)."""
    hbar_eff = math.sqrt(2.0 / ej_over_ec)
    return WellProblem.from_washboard(WashboardPotential(i, 1.0), 1.0, 0, n_grid, hbar_eff)


@dataclass(frozen=True)
class EigenSpectrum:
    levels: np.ndarray
    spacings: np.ndarray
    count_bound: int
    truncated: bool
    n_grid: int
    max_rel_change: float
    edge_energy: float
    hbar: float
    all_levels: np.ndarray = field(repr=False, default=None)

    @property
    def planck(self) -> float:
        return 2.0 * math.pi * self.hbar


def hamiltonian_tridiagonal(wp: WellProblem, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Grid, diagonal and off-diagonal of H on ``n`` interior points."""
    lo, hi = wp.box
    h = (hi - lo) / (n + 1)
    x = lo + h * np.arange(1, n + 1)
    t = wp.hbar**2 / (2.0 * wp.mass * h * h)
    diag = 2.0 * t + np.asarray(wp.potential(x), dtype=float)
    off = np.full(n - 1, -t)
    return x, diag, off


def _lowest(wp: WellProblem, n: int, k: int) -> np.ndarray:
    _, d, e = hamiltonian_tridiagonal(wp, n)
    return eigh_tridiagonal(d, e, eigvals_only=True, select="i", select_range=(0, k - 1))


def eigenlevels(wp: WellProblem, n_levels: int, rtol: float = 1e-4,
                max_grid: int = MAX_GRID) -> EigenSpectrum:
    """Lowest bound levels, doubling the grid until they stop moving.

    Convergence means the largest relative change of ``E - U_bottom`` between
    grids of N and 2N points is below ``rtol``; the finer solve is returned.
    Levels at or above the edge energy are dropped and ``truncated`` is set
    when fewer than ``n_levels`` remain.
    """
    if n_levels < 2:
        raise ValueError("n_levels must be >= 2")
    n = wp.n_grid
    k = min(n_levels, n)
    ref = wp.bottom()
    coarse = _lowest(wp, n, k) - ref
    while True:
        if 2 * n > max_grid:
            raise ConvergenceError(f"levels not converged at N={n} (cap {max_grid})")
        fine = _lowest(wp, 2 * n, k) - ref
        change = float(np.max(np.abs(fine - coarse) / np.abs(fine)))
        n *= 2
        if change < rtol:
            break
        coarse = fine
    all_levels = fine + ref
    edge = wp.edge_energy
    bound = all_levels[all_levels < edge]
    return EigenSpectrum(bound, np.diff(bound), len(bound), len(bound) < n_levels, n, change,
                         edge, wp.hbar, all_levels)


def level_spacings(spec: EigenSpectrum,
                   planck: float | None = None) -> list[tuple[int, float, float]]:
    """(n, E_{n+1} - E_n, (E_{n+1} - E_n)/h) for consecutive reported levels.

    ``planck`` defaults to ``2 pi hbar`` of the solved problem.
    """
    if len(spec.levels) < 2:
        raise ValueError("need at least two levels")
    h = spec.planck if planck is None else planck
    return [(n, float(d), float(d) / h) for n, d in enumerate(np.diff(spec.levels))]


def boltzmann_energy(temperature: float) -> float:
    return K_B * temperature


def thermal_selectivity(temperature: float, nu01: float) -> float:
    """k_B T / (h nu01); much less than one means thermally quiet."""
    if not nu01 > 0:
        raise ValueError("nu01 must be > 0")
    return K_B * temperature / (H * nu01)


def transition_frequency(e_lo: float, e_hi: float, planck: float = H) -> float:
    gap = e_hi - e_lo
    if not gap > 0:
        raise ValueError(f"transition needs a positive gap, got {gap}")
    return gap / planck


class NormalizationError(ValueError):
    def __init__(self, norm: float):
        self.norm = norm
        super().__init__(f"|alpha|^2 + |beta|^2 = {norm:g}, expected 1")


@dataclass(frozen=True)
class QubitState:
    alpha: complex
    beta: complex

    @property
    def probabilities(self) -> tuple[float, float]:
        return abs(self.alpha) ** 2, abs(self.beta) ** 2


def make_qubit_state(alpha: complex, beta: complex, tol: float = 1e-9) -> QubitState:
    norm = abs(alpha) ** 2 + abs(beta) ** 2
    if abs(norm - 1.0) > tol:
        raise NormalizationError(norm)
    return QubitState(complex(alpha), complex(beta))


MAX_QUBITS = 24


def enumerate_basis(n_qubits: int) -> list[str]:
    """Product-basis labels ``|b1,...,bn>`` in lexicographic order."""
    if n_qubits < 0:
        raise ValueError("n_qubits must be >= 0")
    if n_qubits > MAX_QUBITS:
        raise ValueError(f"n_qubits above the memory guard of {MAX_QUBITS}")
    return ["|" + ",".join(bits) + ">" for bits in itertools.product("01", repeat=n_qubits)]
