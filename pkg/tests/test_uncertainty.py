import math

import numpy as np
import pytest
from scipy.integrate import quad

from slitlab import (ApertureState, SlitGeometry, Verdict, analytic_amplitude, cutoff_scan,
                     evaluate_psi, first_pattern_minimum, ground_state_energy,
                     momentum_moments, numeric_phi, position_moments, side_lobe_ratio,
                     uncertainty_report)
from slitlab.errors import ContractError

# Δy/a of the well ground state: √(1/12 - 1/(2π²)), confirmed by quad below
WELL_DY = 0.18075602759566398
WELL_PRODUCT = 0.5678618083866118


def quad_position_moments(state):
    a = state.width
    dens = lambda y: abs(evaluate_psi(state, y)) ** 2
    m1 = quad(lambda y: y * dens(y), -a / 2, a / 2, epsabs=1e-15, limit=200)[0]
    m2 = quad(lambda y: y * y * dens(y), -a / 2, a / 2, epsabs=1e-15, limit=200)[0]
    return m1, m2 - m1 * m1


def test_well_position_spread(well):
    mean, var = position_moments(well)
    qmean, qvar = quad_position_moments(well)
    assert mean == 0.0 and abs(qmean) < 1e-14
    assert var == pytest.approx(qvar, rel=1e-12)
    assert math.sqrt(var) == pytest.approx(WELL_DY, rel=1e-14)
    assert math.sqrt(var) == pytest.approx(math.sqrt(1 / 12 - 1 / (2 * math.pi ** 2)), rel=1e-15)


def test_boxcar_position_spread(boxcar):
    _, var = position_moments(boxcar)
    assert math.sqrt(var) == pytest.approx(1 / math.sqrt(12), rel=1e-15)
    assert var == pytest.approx(quad_position_moments(boxcar)[1], rel=1e-12)


@pytest.mark.parametrize("n", [2, 3, 6])
def test_excited_position_spread(unit_geometry, n):
    s = ApertureState.well(unit_geometry, n)
    assert position_moments(s)[1] == pytest.approx(quad_position_moments(s)[1], rel=1e-10)


def test_sampled_position_moments(unit_geometry, well):
    y = np.linspace(-0.5, 0.5, 8193)
    s = ApertureState.sampled(unit_geometry, evaluate_psi(well, y))
    mean, var = position_moments(s)
    assert abs(mean) < 1e-12
    assert var == pytest.approx(WELL_DY ** 2, rel=1e-9)
    shifted = ApertureState.sampled(unit_geometry, np.exp(-((y - 0.2) / 0.05) ** 2))
    assert position_moments(shifted)[0] == pytest.approx(0.2, abs=1e-6)


def test_boxcar_partial_moments_closed_form(boxcar_amp):
    # <p²>_P = (2ħ/πa)(P - (ħ/a) sin(aP/ħ)) for the boxcar, hand-integrated
    cutoffs = np.array([100.0, 137.0, 250.0, 600.0, 1000.0, 2345.6, 5000.0, 10000.0])
    scan = cutoff_scan(boxcar_amp, cutoffs)
    expected = 2 / math.pi * (cutoffs - np.sin(cutoffs))
    np.testing.assert_allclose(scan.partial_moments, expected, rtol=1e-11)
    # and the closed form itself against brute-force quadrature at P = 100
    f = lambda p: p * p * float(boxcar_amp.intensity(p))
    ref = 2 * quad(f, 0, 100, limit=500, epsabs=1e-12)[0]
    assert ref == pytest.approx(expected[0], rel=1e-9)


def test_boxcar_scan_linear_divergent(boxcar_amp):
    scan = cutoff_scan(boxcar_amp)
    assert scan.verdict is Verdict.LINEAR_DIVERGENT
    assert scan.slope == pytest.approx(2 / math.pi, rel=5e-3)
    assert np.all(np.diff(scan.partial_moments) >= 0)
    mm = momentum_moments(boxcar_amp)
    assert mm.divergent and mm.delta_p is None and mm.growth_rate == scan.slope


def test_well_scan_convergent(well_report):
    mm = well_report
    assert mm.scan.verdict is Verdict.CONVERGENT
    assert mm.second_moment_p == pytest.approx(math.pi ** 2, abs=1e-12)
    assert mm.scan.limit == pytest.approx(math.pi ** 2, abs=1e-8)
    assert mm.delta_p == pytest.approx(math.pi, abs=1e-12)
    assert mm.mean_p == 0.0
    assert not mm.divergent


def test_dirac_like_state_is_other(unit_geometry):
    v = np.zeros(4097)
    v[2048] = 1.0
    spike = ApertureState.sampled(unit_geometry, v)
    mm = momentum_moments(numeric_phi(spike, [0.0, 1.0]))
    assert mm.scan.verdict is Verdict.OTHER


def test_degenerate_cutoffs_rejected(well_amp):
    with pytest.raises(ContractError):
        cutoff_scan(well_amp, [1, 2, 3])
    with pytest.raises(ContractError):
        cutoff_scan(well_amp, [1, 2, 3, 4, 5, 6, 8, 7])
    with pytest.raises(ContractError):
        cutoff_scan(well_amp, [0, 1, 2, 3, 4, 5, 6, 7])


def test_well_report(well_report):
    r = well_report
    assert r.delta_y == pytest.approx(WELL_DY, rel=1e-14)
    assert r.delta_p == pytest.approx(math.pi, rel=1e-15)
    assert r.product_dy_dp == pytest.approx(WELL_PRODUCT, rel=1e-14)
    assert r.product_dy_dp == pytest.approx(math.pi * math.sqrt(1 / 12 - 1 / (2 * math.pi ** 2)))
    assert r.product_dy_dp >= 0.5 - 1e-9


def test_boxcar_report_divergent(boxcar):
    r = uncertainty_report(boxcar)
    assert r.divergent and r.product_dy_dp is None and r.delta_p is None
    assert r.growth_rate == pytest.approx(2 / math.pi, rel=5e-3)


@pytest.mark.parametrize("s", [0.5, 5.0])
def test_scale_covariance(well_report, s):
    base = well_report
    r = uncertainty_report(ApertureState.well(SlitGeometry(width=s)))
    assert r.delta_y == pytest.approx(s * base.delta_y, rel=1e-14)
    assert r.delta_p == pytest.approx(base.delta_p / s, rel=1e-14)
    assert r.product_dy_dp == pytest.approx(base.product_dy_dp, rel=1e-14)
    assert r.scan.limit == pytest.approx((math.pi / s) ** 2, rel=1e-9)


@pytest.mark.parametrize("n,hbar", [(2, 1.0), (3, 0.25), (5, 1.0)])
def test_heisenberg_bound(n, hbar):
    r = uncertainty_report(ApertureState.well(SlitGeometry(hbar=hbar), n))
    assert r.product_dy_dp >= hbar / 2 - 1e-9
    assert r.scan.verdict is Verdict.CONVERGENT


def test_delta_p_matches_confinement_energy(unit_geometry, well_report):
    e_y = ground_state_energy(unit_geometry, 1)
    dp = well_report.delta_p
    assert dp == pytest.approx(math.sqrt(2 * unit_geometry.mass * e_y), abs=1e-9)


def test_first_minimum_examples(boxcar_amp, well_amp):
    assert first_pattern_minimum(boxcar_amp) == pytest.approx(2 * math.pi, rel=1e-12)
    w = first_pattern_minimum(well_amp)
    assert w == pytest.approx(3 * math.pi, rel=1e-12)
    assert abs(w - math.pi) > 1
    wide = analytic_amplitude(ApertureState.boxcar(SlitGeometry(width=2.0)))
    assert first_pattern_minimum(wide) == pytest.approx(math.pi, rel=1e-12)


def test_first_minimum_numeric_and_excited(unit_geometry):
    s = ApertureState.sampled(unit_geometry, np.ones(8193))
    assert first_pattern_minimum(numeric_phi(s, [0.0, 1.0])) == pytest.approx(2 * math.pi, rel=1e-9)
    # n = 2: φ ∝ sin(p/2)/(4π² - p²): zero at p = 0 is excluded, removable at 2π, next zero 4π
    amp2 = analytic_amplitude(ApertureState.well(unit_geometry, 2))
    assert first_pattern_minimum(amp2) == pytest.approx(4 * math.pi, rel=1e-12)


def test_side_lobe_ratios(boxcar_amp, well_amp):
    assert side_lobe_ratio(boxcar_amp) == pytest.approx(0.04719, abs=1e-4)
    assert side_lobe_ratio(well_amp) <= 0.02
    assert side_lobe_ratio(well_amp) < side_lobe_ratio(boxcar_amp)
