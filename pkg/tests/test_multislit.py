import math

import numpy as np
import pytest

from slitlab import (ApertureState, MultiSlitState, SlitGeometry, analytic_amplitude,
                     array_factor, compose_momentum_amplitude, direct_multislit_phi,
                     evaluate_psi, parseval_norm)
from slitlab.errors import OverlapError


def test_single_slit_identity(well, well_amp):
    amp = compose_momentum_amplitude(MultiSlitState(well, 1, 1.0))
    p = np.linspace(-40, 40, 401)
    np.testing.assert_allclose(amp(p), well_amp(p), rtol=0, atol=1e-15)


def test_two_boxcars_examples(boxcar):
    amp = compose_momentum_amplitude(MultiSlitState(boxcar, 2, 3.0))
    assert float(amp.intensity(0.0)) == pytest.approx(1 / math.pi, rel=1e-14)
    assert float(amp.intensity(math.pi / 3)) < 1e-30
    assert np.all(np.isfinite(amp.intensity(np.linspace(-50, 50, 2001))))


@pytest.mark.parametrize("count", [2, 3])
@pytest.mark.parametrize("kind", ["boxcar", "well"])
def test_composed_matches_direct_quadrature(unit_geometry, count, kind):
    base = ApertureState.boxcar(unit_geometry) if kind == "boxcar" else ApertureState.well(unit_geometry)
    multi = MultiSlitState(base, count, 3.0)
    p = np.linspace(-30, 30, 601)
    composed = compose_momentum_amplitude(multi)(p)
    direct = direct_multislit_phi(multi, p)
    assert np.max(np.abs(composed - direct)) <= 1e-6


@pytest.mark.parametrize("count", [2, 3, 5])
def test_principal_maxima(count):
    d = 3.0
    for m in (0, 1, 2):
        assert array_factor(2 * math.pi * m / d, count, d) == pytest.approx(count, rel=1e-12)
        # and just off the peak, through the guarded branch
        assert array_factor(2 * math.pi * m / d + 1e-6, count, d) == pytest.approx(count, rel=1e-9)


def test_envelope_factorization(well, well_amp):
    multi = MultiSlitState(well, 4, 2.5)
    p = np.linspace(-25, 25, 1001)
    lhs = compose_momentum_amplitude(multi).intensity(p)
    rhs = well_amp.intensity(p) * array_factor(p, 4, 2.5)
    np.testing.assert_allclose(lhs, rhs, rtol=1e-12, atol=1e-18)


def test_composed_parseval(boxcar, well):
    assert abs(parseval_norm(compose_momentum_amplitude(MultiSlitState(well, 2, 3.0))) - 1) < 1e-6
    assert abs(parseval_norm(compose_momentum_amplitude(MultiSlitState(boxcar, 3, 2.0))) - 1) < 1e-6


def test_overlap_rejected(boxcar):
    with pytest.raises(OverlapError):
        MultiSlitState(boxcar, 2, 0.9)
    MultiSlitState(boxcar, 1, 0.1)


def test_wavefunction_and_moments(well):
    multi = MultiSlitState(well, 3, 2.0)
    np.testing.assert_allclose(multi.centers, [-2.0, 0.0, 2.0])
    assert multi(2.0).real == pytest.approx(math.sqrt(2) / math.sqrt(3))
    y = np.linspace(-3.5, 3.5, 70001)
    dens = np.abs(multi(y)) ** 2
    assert np.trapezoid(dens, y) == pytest.approx(1.0, abs=1e-6)
    mean, var = multi.position_moments()
    assert mean == pytest.approx(0.0, abs=1e-15)
    assert var == pytest.approx(np.trapezoid(y * y * dens, y), rel=1e-6)
    assert var == pytest.approx(0.18075602759566398 ** 2 + 8 / 3, rel=1e-12)
