"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import contextlib
import json
import math
import time

import mpmath
import numpy as np
import pytest
from scipy import stats
from scipy.integrate import quad
from scipy.optimize import brentq, minimize_scalar

from washboard.cli import main
from washboard.constants import K_B, ROUNDED
from washboard.core import WashboardPotential, barrier_height, find_extrema
from washboard.dynamics import (DynamicalSystem, SimConfig, mean_squared_displacement,
                                msd_slope, simulate_langevin_ensemble)
from washboard.josephson import (JunctionParams, hysteresis_loop, iv_curve,
                                 josephson_frequency, junction_energies)
from washboard.optics import (BesselBeamSetup, BracketError, LatticeParams,
                              PolarizabilityCurve, bessel_beam_intensity, bessel_j0,
                              lattice_period, lattice_to_washboard, magic_wavelength,
                              ring_slit_zmax)
from washboard.quantum import (NormalizationError, WellProblem, _lowest, eigenlevels,
                               enumerate_basis, hamiltonian_tridiagonal, josephson_well,
                               make_qubit_state)


class Checks:
    def __init__(self):
        self.items: list[tuple[str, bool]] = []

    def add(self, label: str, ok) -> None:
        self.items.append((label, bool(ok)))


@contextlib.contextmanager
def criterion(report, number: int, limit_s: float):
    checks = Checks()
    t0 = time.perf_counter()
    try:
        yield checks
    except Exception as exc:
        report(number, False, f"raised {type(exc).__name__}: {exc}")
        raise
    elapsed = time.perf_counter() - t0
    checks.add(f"runtime {elapsed:.2f}s < {limit_s:g}s", elapsed < limit_s)
    failed = [label for label, ok in checks.items if not ok]
    if failed:
        detail = "failed: " + "; ".join(failed)
    elif len(checks.items) <= 8:
        detail = "; ".join(label for label, _ in checks.items)
    else:
        detail = f"{len(checks.items)} checks, {elapsed:.2f}s"
    report(number, not failed, detail)
    assert not failed, failed


def test_criterion_01_extrema_closed_form(acceptance_report):
    with criterion(acceptance_report, 1, 1.0) as c:
        dx = 1e-5
        x = np.arange(0.0, 4 * math.pi, dx)
        for i in (0.1, 0.3, 0.5, 0.7, 0.9):
            p = WashboardPotential(i, 1.0)
            minima = [e.position for e in find_extrema(p, 0.0, 4 * math.pi) if e.kind == "minimum"]
            exact = [math.asin(i) + 2 * math.pi * n for n in range(2)]
            c.add(f"i={i} closed form", len(minima) == 2 and np.max(np.abs(
                np.array(minima) - exact)) < 1e-9)
            u = p.evaluate(x)
            grid = x[1:-1][(u[1:-1] < u[:-2]) & (u[1:-1] < u[2:])]
            c.add(f"i={i} grid scan", len(grid) == 2 and np.max(np.abs(grid - exact)) < 1e-4)


def test_criterion_02_critical_tilt(acceptance_report):
    with criterion(acceptance_report, 2, 1.0) as c:
        for a, b, k in ((1.0, 1.0, 1.0), (-3.0, 1.5, 2.0)):
            p = WashboardPotential(a, b, k)
            ext = find_extrema(p, 0.0, 3 * p.period - 1e-9)
            c.add(f"A={a} one inflection per period",
                  [e.kind for e in ext] == ["inflection"] * 3)
        ratios = np.linspace(0.9, 0.999, 100)
        heights = np.array([barrier_height(WashboardPotential(r, 1.0)) for r in ratios])
        c.add("barrier decreases monotonically", np.all(np.diff(heights) < 0))
        c.add("barrier tends to zero", heights[-1] < 1e-3 * heights[0])


def test_criterion_03_overdamped_iv(acceptance_report):
    with criterion(acceptance_report, 3, 30.0) as c:
        jp = JunctionParams.from_reduced(0.01)
        cfg = SimConfig(dt=0.005, t_end=4000.0, sample_stride=10)
        for i, v in iv_curve(jp, [0.0, 0.5, 0.9, 1.1, 1.5, 2.0], cfg):
            if i > 1:
                c.add(f"v({i}) = {v:.5f}", abs(v / math.sqrt(i * i - 1) - 1) < 0.01)
            else:
                c.add(f"v({i}) = {v:.2e}", abs(v) < 1e-4)


def test_criterion_04_hysteresis(acceptance_report):
    with criterion(acceptance_report, 4, 60.0) as c:
        jp = JunctionParams.from_reduced(25.0)
        biases = [round(0.05 * j, 10) for j in range(31)]
        res = hysteresis_loop(jp, biases, SimConfig(dt=0.05, t_end=1000.0, sample_stride=10))
        s, r = res.switching_current, res.retrapping_current
        c.add(f"switching {s} > retrapping {r}", s > r)
        c.add("both in (0, 1]", 0 < r <= 1 and 0 < s <= 1)


def test_criterion_05_worked_numbers(acceptance_report):
    with criterion(acceptance_report, 5, 1.0) as c:
        f = josephson_frequency(100e-6, ROUNDED)
        c.add(f"f_J = {f:.7e} Hz", abs(f - 48.35934e9) < 1e-3)
        e_j = junction_energies(JunctionParams(1e-3, 1.0, 1e-12)).josephson_energy
        c.add(f"E_J = {e_j:.3e} J", 1e-19 <= e_j <= 4e-18)
        kt = K_B * 4.2
        c.add(f"k_B T = {kt:.3e} J", abs(kt / 0.00006e-18 - 1) < 0.05)


def test_criterion_06_eigensolver_oracles(acceptance_report):
    with criterion(acceptance_report, 6, 10.0) as c:
        omega, mass = 1.3, 0.7
        harm = WellProblem(lambda x: 0.5 * mass * omega**2 * np.asarray(x) ** 2, mass,
                           (-10.0, 10.0), 256, 1.0)
        levels = eigenlevels(harm, 6).levels
        c.add("harmonic n<=5", np.max(np.abs(levels / ((np.arange(6) + 0.5) * omega) - 1)) < 1e-3)
        width = 2.0
        box = WellProblem(lambda x: np.zeros_like(np.asarray(x, dtype=float)), 1.0,
                          (0.0, width), 256, 1.0, barrier=math.inf)
        sq = eigenlevels(box, 4).levels
        exact = np.arange(1, 5) ** 2 * math.pi**2 / (2 * width**2)
        c.add("square well n<=3", np.max(np.abs(sq / exact - 1)) < 1e-3)
        wp = josephson_well(0.7)
        _, d, e = hamiltonian_tridiagonal(wp, 256)
        dense = np.linalg.eigvalsh(np.diag(d) + np.diag(e, 1) + np.diag(e, -1))
        c.add("tridiagonal vs dense", np.max(np.abs(_lowest(wp, 256, 256) - dense)) < 1e-10)


def test_criterion_07_anharmonic_spacings(acceptance_report):
    with criterion(acceptance_report, 7, 10.0) as c:
        for i in (0.5, 0.7, 0.9):
            spec = eigenlevels(josephson_well(i), 10)
            c.add(f"i={i}: {spec.count_bound} bound levels, decreasing",
                  spec.count_bound >= 3 and np.all(np.diff(spec.spacings) < 0))


def test_criterion_08_langevin(acceptance_report):
    with criterion(acceptance_report, 8, 120.0) as c:
        eta, kt = 2.0, 0.5
        free = DynamicalSystem(WashboardPotential(0.0, 0.0), eta, k_boltzmann=1.0)
        ens = simulate_langevin_ensemble(free, SimConfig(dt=0.01, t_end=10.0, seed=1,
                                                         temperature=kt), 1000)
        slope = msd_slope(*mean_squared_displacement(ens, 50))
        c.add(f"MSD slope {slope:.4f} vs {2 * kt / eta}", abs(slope / (2 * kt / eta) - 1) < 0.05)

        lattice = DynamicalSystem(WashboardPotential(0.0, 1.0), 1.0, k_boltzmann=1.0)
        edges = np.linspace(-math.pi, math.pi, 21)
        z = quad(lambda x: math.exp(math.cos(x)), -math.pi, math.pi)[0]
        probs = np.array([quad(lambda x: math.exp(math.cos(x)), a, b)[0] / z
                          for a, b in zip(edges, edges[1:])])
        n = 5000
        for seed in range(1, 6):
            start = np.random.default_rng(seed + 1000).uniform(-math.pi, math.pi, n)
            cfg = SimConfig(dt=0.005, t_end=20.0, seed=seed, temperature=1.0,
                            sample_stride=4000)
            final = simulate_langevin_ensemble(lattice, cfg, n, start).positions[:, -1]
            wrapped = (final + math.pi) % (2 * math.pi) - math.pi
            counts, _ = np.histogram(wrapped, edges)
            p = stats.chisquare(counts, probs * n).pvalue
            c.add(f"seed {seed} Boltzmann p={p:.3f}", p > 0.01)


def test_criterion_09_bessel(acceptance_report):
    with criterion(acceptance_report, 9, 5.0) as c:
        x = np.linspace(0.0, 50.0, 251)
        with mpmath.workdps(60):
            ref = np.array([float(mpmath.besselj(0, mpmath.mpf(float(v)))) for v in x])
        c.add("J0 vs high-precision reference", np.max(np.abs(bessel_j0(x) - ref)) < 1e-10)
        zero = brentq(bessel_j0, 2.0, 3.0, xtol=1e-14)
        c.add(f"first zero {zero:.9f}", abs(zero - 2.4048256) < 1e-6)
        z_max = 0.7
        bs = BesselBeamSetup(670e-9, 0.0125, 1.0, z_max)
        peak = minimize_scalar(lambda z: -bessel_beam_intensity(bs, 0.0, z), bounds=(0, z_max),
                               method="bounded", options={"xatol": 1e-12}).x
        c.add(f"axial peak {peak:.9f}", abs(peak - z_max / 2) < 1e-6 * z_max)
        c.add("z_max = 700 mm", ring_slit_zmax(8.75, 100.0, 2.5) == 700.0)


def test_criterion_10_lattice_and_magic(acceptance_report):
    with criterion(acceptance_report, 10, 5.0) as c:
        x = np.linspace(-5e-6, 5e-6, 20001)
        for depth in (2e-30, -2e-30):
            lp = LatticeParams.from_wavelength(depth, 1.064e-6)
            lw = lattice_to_washboard(lp)
            err = np.max(np.abs(lw.potential.evaluate(x) + lw.offset - lp.evaluate(x)))
            c.add(f"identity U0={depth:g}", err <= 1e-12 * abs(depth))
        c.add("period 316.4 nm", abs(lattice_period(632.8e-9) - 316.4e-9) < 1e-21)
        a1 = PolarizabilityCurve(((1.0, 5e-7),))
        a2 = PolarizabilityCurve(((0.5, 7e-7),))
        expected = (2 * 7e-7**-2 - 5e-7**-2) ** -0.5
        lam = magic_wavelength(a1, a2, (8e-7, 1e-5))
        c.add(f"magic {lam:.9e}", abs(lam / expected - 1) < 1e-6)
        for bracket, curves, msg in (((1e-6, 2e-6), (a1, a2), "no crossing in bracket"),
                                     ((1e-6, 2e-6), (a1, a1), "ambiguous bracket")):
            with pytest.raises(BracketError) as info:
                magic_wavelength(*curves, bracket)
            c.add(msg, str(info.value) == msg)


def test_criterion_11_qubits(acceptance_report):
    with criterion(acceptance_report, 11, 1.0) as c:
        c.add("n=4 basis 16", len(enumerate_basis(4)) == 16)
        basis = enumerate_basis(15)
        c.add("n=15 basis 32768 unique", len(basis) == 32768 == len(set(basis)))
        with pytest.raises(NormalizationError) as info:
            make_qubit_state(2, math.sqrt(3) * 1j)
        c.add(f"(2, sqrt3 i) rejected with norm {info.value.norm:g}",
              abs(info.value.norm - 7) < 1e-12)


REPLAY_RUNS = [
    ["potential", "--A", "0.2", "--n", "200"],
    ["simulate", "brownian", "--temperature", "0.6", "--seed", "99", "--t-end", "4"],
    ["simulate", "rcsj", "--i", "1.3", "--t-end", "200"],
    ["ivcurve", "--biases", "0.5,1.2,1.8", "--t-end", "300", "--format", "json"],
    ["shapiro", "--i-ac", "0.4", "--i-start", "0.9", "--i-stop", "1.1", "--t-end", "300"],
    ["eigen", "--i", "0.7", "--levels", "4"],
    ["optics", "magic"],
    ["optics", "bessel-axial"],
]


def test_criterion_12_replay_bitwise(acceptance_report, tmp_path):
    with criterion(acceptance_report, 12, 60.0) as c:
        for j, args in enumerate(REPLAY_RUNS):
            first, again = tmp_path / f"run{j}", tmp_path / f"replay{j}"
            c.add(f"{args[0]} run", main([*args, "--out", str(first)]) == 0)
            c.add(f"{args[0]} replay",
                  main(["replay", str(first / "manifest.json"), "--out", str(again)]) == 0)
            names = sorted(p.name for p in first.iterdir())
            same = names == sorted(p.name for p in again.iterdir())
            for name in names:
                a, b = (first / name).read_bytes(), (again / name).read_bytes()
                if name == "manifest.json":
                    a, b = (json.loads(t) for t in (a, b))
                    a.pop("duration_s"), b.pop("duration_s")
                same = same and a == b
            c.add(f"{args[0]} outputs identical", same)
