import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from slitlab import (ApertureState, SlitGeometry, evaluate_psi, ground_state_energy,
                     transmission_allowed)
from slitlab.errors import DomainError, GeometryError, OverlapError


def test_boxcar_center(boxcar):
    assert evaluate_psi(boxcar, 0.0) == 1.0


def test_boxcar_closed_interval(boxcar):
    assert evaluate_psi(boxcar, 0.5) == 1.0
    assert evaluate_psi(boxcar, -0.5) == 1.0
    assert evaluate_psi(boxcar, 0.5 + 1e-12) == 0.0


def test_well_boundaries_and_center(well):
    assert evaluate_psi(well, 0.5) == 0.0
    assert evaluate_psi(well, -0.5) == 0.0
    assert evaluate_psi(well, 0.0).real == pytest.approx(math.sqrt(2), abs=1e-15)


def test_outside_support_is_zero(unit_geometry):
    y = np.array([-3.0, -0.51, 0.51, 2.0])
    for s in (ApertureState.boxcar(unit_geometry), ApertureState.well(unit_geometry, 3)):
        assert np.all(evaluate_psi(s, y) == 0)


def test_non_finite_position_rejected(well):
    with pytest.raises(DomainError):
        evaluate_psi(well, float("nan"))
    with pytest.raises(DomainError):
        evaluate_psi(well, np.array([0.0, np.inf]))


@pytest.mark.parametrize("make", [
    lambda g: ApertureState.boxcar(g),
    lambda g: ApertureState.well(g, 1),
    lambda g: ApertureState.well(g, 2),
    lambda g: ApertureState.well(g, 7),
])
@pytest.mark.parametrize("a", [0.5, 1.0, 3.0])
def test_analytic_normalization(make, a):
    s = make(SlitGeometry(width=a))
    val = quad(lambda y: abs(evaluate_psi(s, y)) ** 2, -a / 2, a / 2, limit=200,
               epsabs=1e-14, epsrel=1e-14)[0]
    assert abs(val - 1) < 1e-10


def test_sampled_renormalized_and_trapezoid_close(unit_geometry):
    y = np.linspace(-0.5, 0.5, 4097)
    s = ApertureState.sampled(unit_geometry, 3.0 * np.cos(math.pi * y) * (1 + 0.2j * y))
    assert abs(np.trapezoid(np.abs(s.samples) ** 2, y) - 1) < 1e-6


def test_sampled_validation(unit_geometry):
    with pytest.raises(DomainError):
        ApertureState.sampled(unit_geometry, np.zeros(100))
    with pytest.raises(DomainError):
        ApertureState.sampled(unit_geometry, [1.0, np.nan, 1.0])


def test_from_samples_recenters():
    y = np.linspace(2.0, 4.0, 201)
    s = ApertureState.from_samples(y, np.ones_like(y))
    assert s.width == pytest.approx(2.0)
    assert s.y[0] == pytest.approx(-1.0)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_parity(unit_geometry, n):
    s = ApertureState.well(unit_geometry, n)
    y = np.linspace(0, 0.5, 101)
    expected = 1 if n % 2 else -1
    np.testing.assert_allclose(evaluate_psi(s, -y), expected * evaluate_psi(s, y), atol=1e-14)
    assert s.parity == expected
    assert ApertureState.boxcar(unit_geometry).parity == 1


def test_ground_state_energy_examples(unit_geometry):
    assert ground_state_energy(unit_geometry, 1) == pytest.approx(math.pi ** 2 / 2, rel=1e-15)
    assert ground_state_energy(SlitGeometry(width=2.0), 1) == pytest.approx(math.pi ** 2 / 8)
    assert ground_state_energy(unit_geometry, 2) == pytest.approx(2 * math.pi ** 2)
    with pytest.raises(DomainError):
        ground_state_energy(unit_geometry, 0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_energy_against_finite_difference_kinetic(unit_geometry, n):
    # <-ħ²/2μ ψ''> on a fine grid, independent of the closed form
    y = np.linspace(-0.5, 0.5, 20001)
    psi = evaluate_psi(ApertureState.well(unit_geometry, n), y).real
    h = y[1] - y[0]
    d2 = (psi[2:] - 2 * psi[1:-1] + psi[:-2]) / h ** 2
    kinetic = -0.5 * np.trapezoid(psi[1:-1] * d2, y[1:-1])
    assert kinetic == pytest.approx(ground_state_energy(unit_geometry, n), rel=1e-6)


@given(st.integers(1, 200), st.floats(0.1, 10), st.floats(0.1, 10), st.floats(0.1, 10))
def test_energy_ordering(n, a, hbar, mass):
    g = SlitGeometry(width=a, hbar=hbar, mass=mass)
    assert ground_state_energy(g, n + 1) > ground_state_energy(g, n)


def test_transmission_examples():
    t = transmission_allowed(SlitGeometry(momentum=10.0))
    assert t.allowed and t.pz == pytest.approx(math.sqrt(100 - math.pi ** 2), rel=1e-14)
    assert t.pz == pytest.approx(9.493703, abs=1e-6)
    edge = transmission_allowed(SlitGeometry(momentum=math.pi))
    assert edge.allowed and edge.pz == 0.0
    low = transmission_allowed(SlitGeometry(momentum=1.0))
    assert not low.allowed and low.pz is None


def test_transmission_pz_matches_energy_balance():
    g = SlitGeometry(momentum=7.3, mass=2.5, width=0.8, hbar=1.3)
    t = transmission_allowed(g)
    e_z = t.pz ** 2 / (2 * g.mass)
    assert e_z == pytest.approx(t.incident_energy - t.confinement_energy, rel=1e-12)


@settings(max_examples=200)
@given(st.floats(0.05, 50), st.floats(0.0, 50), st.floats(0.1, 5), st.floats(0.1, 5))
def test_transmission_monotone_in_momentum(p1, dp, a, hbar):
    t1 = transmission_allowed(SlitGeometry(width=a, hbar=hbar, momentum=p1))
    t2 = transmission_allowed(SlitGeometry(width=a, hbar=hbar, momentum=p1 + dp))
    if t1.allowed:
        assert t2.allowed


def test_geometry_invariants():
    g = SlitGeometry(width=1.0, momentum=2 * math.pi, hbar=1.0)
    assert g.wavelength == pytest.approx(1.0)
    with pytest.raises(GeometryError):
        SlitGeometry(width=-1.0)
    with pytest.raises(GeometryError):
        SlitGeometry(slit_count=2)
    with pytest.raises(OverlapError):
        SlitGeometry(slit_count=2, spacing=0.5)
    SlitGeometry(slit_count=2, spacing=1.0)
