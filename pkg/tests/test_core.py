import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from washboard import (DegeneratePotentialError, PendulumParams, WashboardPotential,
                       barrier_height, critical_tilt, find_extrema, pendulum_potential)
from washboard.core import flanking_maxima, well_minimum

finite = st.floats(-50, 50, allow_nan=False)
tilts = st.floats(-3, 3, allow_nan=False)
amps = st.floats(0.1, 5, allow_nan=False)
waves = st.floats(0.2, 4, allow_nan=False)
phases = st.floats(-math.pi, math.pi, allow_nan=False)


def grid_extrema(p, lo, hi, dx=1e-4):
    x = np.arange(lo, hi, dx)
    f = p.force(x)
    idx = np.nonzero(np.sign(f[:-1]) != np.sign(f[1:]))[0]
    # linear interpolation of the force zero
    return x[idx] - f[idx] * dx / (f[idx + 1] - f[idx])


def test_value_at_origin():
    p = WashboardPotential(0.1, 1.0)
    assert p.evaluate(0.0) == -1.0
    assert p.force(0.0) == pytest.approx(0.1)


def test_scalar_and_array_paths_agree():
    p = WashboardPotential(0.3, 1.7, 2.1, 0.4)
    xs = np.linspace(-5, 5, 17)
    assert np.array_equal(p.evaluate(xs), [p.evaluate(float(x)) for x in xs])
    assert np.allclose(p.force(xs), [p.force(float(x)) for x in xs], rtol=0, atol=1e-15)


@pytest.mark.parametrize("bad", [
    dict(tilt=0.1, amplitude=-1.0),
    dict(tilt=0.1, amplitude=1.0, wavenumber=0.0),
    dict(tilt=math.nan, amplitude=1.0),
])
def test_rejects_bad_parameters(bad):
    with pytest.raises(ValueError):
        WashboardPotential(**bad)


@given(tilts, amps, waves, phases, finite)
def test_force_matches_finite_difference(a, b, k, phi, x):
    p = WashboardPotential(a, b, k, phi)
    h = 1e-5
    fd = -(p.evaluate(x + h) - p.evaluate(x - h)) / (2 * h)
    assert p.force(x) == pytest.approx(fd, abs=1e-6 * (1 + b * k + abs(a)))


@given(tilts, amps, waves, phases, finite)
def test_tilted_periodicity(a, b, k, phi, x):
    p = WashboardPotential(a, b, k, phi)
    shifted = p.evaluate(x + p.period)
    assert shifted == pytest.approx(p.evaluate(x) - a * p.period, abs=1e-9 * (1 + abs(a) * 60))


@settings(max_examples=100, deadline=None)
@given(st.floats(-0.95, 0.95), amps, waves, phases)
def test_extrema_agree_with_grid_scan(ratio, b, k, phi):
    p = WashboardPotential(ratio * b * k, b, k, phi)
    lo, hi = -7.0, 7.0
    found = np.array([e.position for e in find_extrema(p, lo, hi)])
    scanned = grid_extrema(p, lo, hi)
    # skip roots that sit within a grid cell of the window edge
    inner = scanned[(scanned > lo + 1e-3) & (scanned < hi - 1e-3)]
    for x in inner:
        assert np.min(np.abs(found - x)) < 1e-4
    for x in found[(found > lo + 1e-3) & (found < hi - 1e-3)]:
        assert np.min(np.abs(scanned - x)) < 1e-4


def test_extrema_kinds_alternate_and_match_curvature():
    p = WashboardPotential(0.4, 1.0, 1.0, 0.2)
    ext = find_extrema(p, -10, 10)
    kinds = [e.kind for e in ext]
    assert all(a != b for a, b in zip(kinds, kinds[1:]))
    for e in ext:
        assert abs(p.force(e.position)) < 1e-12
        assert (p.curvature(e.position) > 0) == (e.kind == "minimum")


def test_extrema_closed_form_for_josephson_bias():
    for i in (0.1, 0.5, 0.9):
        ext = find_extrema(WashboardPotential(i, 1.0), 0, 6 * math.pi - 0.5)
        minima = [e.position for e in ext if e.kind == "minimum"]
        assert minima == pytest.approx([math.asin(i) + 2 * math.pi * n for n in range(3)],
                                       abs=1e-12)


def test_inflection_at_critical_tilt():
    p = WashboardPotential(2.0, 1.0, 2.0)
    assert critical_tilt(p) == 2.0
    ext = find_extrema(p, 0, 4 * math.pi - 1e-9)
    assert [e.kind for e in ext] == ["inflection"] * 4
    for e in ext:
        assert abs(p.force(e.position)) < 1e-12
        assert abs(p.curvature(e.position)) < 1e-12


def test_monotone_cases_have_no_extrema():
    assert find_extrema(WashboardPotential(1.5, 1.0), -10, 10) == []
    assert find_extrema(WashboardPotential(0.5, 0.0), -10, 10) == []
    with pytest.raises(DegeneratePotentialError, match="degenerate-or-monotone"):
        barrier_height(WashboardPotential(1.5, 1.0))
    with pytest.raises(DegeneratePotentialError):
        well_minimum(WashboardPotential(1.0, 1.0))


def barrier_closed_form(s, b):
    return 2 * b * (math.sqrt(1 - s * s) - s * (math.pi / 2 - math.asin(s)))


@pytest.mark.parametrize("s", [0.0, 0.2, 0.5, 0.8, 0.99])
@pytest.mark.parametrize("sign", [1, -1])
def test_barrier_height_closed_form(s, sign):
    p = WashboardPotential(sign * s * 1.3 * 0.7, 1.3, 0.7)
    assert barrier_height(p) == pytest.approx(barrier_closed_form(s, 1.3), rel=1e-9, abs=1e-12)


def test_barrier_height_brute_force():
    p = WashboardPotential(0.35, 2.0, 1.5, 0.3)
    x_min = well_minimum(p)
    x = np.linspace(x_min, x_min + p.period, 200001)
    assert barrier_height(p) == pytest.approx(np.max(p.evaluate(x)) - p.evaluate(x_min),
                                              rel=1e-8)


def test_barrier_shrinks_monotonically_toward_critical_tilt():
    ratios = np.linspace(0.0, 0.999, 200)
    heights = [barrier_height(WashboardPotential(r, 1.0)) for r in ratios]
    assert np.all(np.diff(heights) < 0)
    assert heights[-1] < 1e-3


@given(tilts.filter(lambda a: abs(a) < 0.99), phases, st.integers(-5, 5))
def test_flanking_maxima_bracket_the_well(a, phi, n):
    p = WashboardPotential(a, 1.0, 1.0, phi)
    x = well_minimum(p, n)
    left, right = flanking_maxima(p, n)
    assert left < x < right
    assert right - left == pytest.approx(p.period)


def test_pendulum_mapping():
    pp = PendulumParams(mass=2.0, length=0.5, gravity=9.81, torque=0.3)
    p = pendulum_potential(pp)
    assert (p.tilt, p.amplitude, p.wavenumber) == (0.3, 2.0 * 9.81 * 0.5, 1.0)
    assert pp.inertia == pytest.approx(2.0 * 0.25)
    hm = PendulumParams.from_hanging_mass(1.0, 1.0, hanging_mass=0.1, pulley_radius=0.05)
    assert hm.torque == pytest.approx(0.1 * 9.81 * 0.05)
