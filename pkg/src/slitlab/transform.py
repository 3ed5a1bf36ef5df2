"""Momentum-space images of aperture states.

Convention: ``φ(p) = (2πħ)^(-1/2) ∫ ψ(y) exp(-i p y / ħ) dy``. With it the
boxcar state maps onto a sinc and the well eigenstates onto

    φ_n(p) = 2n √(πa/ħ) · {cos, i·sin}(a p / 2ħ) / (n²π² - a²p²/ħ²)

(cos for odd n, i·sin for even n). Every closed form has removable 0/0
points, which are evaluated through their limits.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ._numerics import GUARD_BAND, check_uniform, simpson_weights, sinc, uniform_grid
from .aperture import DEFAULT_POSITION_SAMPLES, ApertureState, SlitGeometry, StateKind
from .errors import ContractError

__all__ = [
    "AmplitudeSource",
    "MomentumAmplitude",
    "PatternProfile",
    "analytic_boxcar_phi",
    "analytic_well_phi",
    "analytic_well_ground_phi",
    "analytic_amplitude",
    "fourier_quadrature",
    "numeric_phi",
    "intensity_profile",
    "default_momentum_grid",
]

_CHUNK = 256


class AmplitudeSource(enum.Enum):
    ANALYTIC_BOXCAR = "analytic_boxcar"
    ANALYTIC_WELL = "analytic_well"
    NUMERIC = "numeric"
    COMPOSED = "composed"


@dataclass(frozen=True, eq=False)
class MomentumAmplitude:
    """φ(p_y) of some aperture, callable at any momentum.

    ``p`` and ``values`` hold the grid the amplitude was produced on (for
    numeric and composed sources). ``extent`` is the total width of the
    aperture in position space, which sets the finest momentum feature
    (``πħ/extent``) that scans must resolve.
    """

    source: AmplitudeSource
    geometry: SlitGeometry
    evaluator: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    extent: float
    n: int = 1
    state: object | None = field(default=None, repr=False)
    p: np.ndarray | None = field(default=None, repr=False)
    values: np.ndarray | None = field(default=None, repr=False)
    hermitian: bool = True

    def __call__(self, p):
        scalar = np.ndim(p) == 0
        out = self.evaluator(np.atleast_1d(np.asarray(p, dtype=float)))
        return complex(out[0]) if scalar else out

    def intensity(self, p):
        return np.abs(self(p)) ** 2

    @property
    def hbar(self) -> float:
        return self.geometry.hbar

    @property
    def feature_scale(self) -> float:
        """Half the narrowest lobe spacing, ``πħ / extent``."""
        return math.pi * self.geometry.hbar / self.extent

    def signed(self, p):
        """Real-valued amplitude whose sign changes mark the zeros of φ.

        For even real states φ is real; for odd ones it is purely imaginary.
        Anything else falls back to the projection on the phase of φ at a
        reference momentum.
        """
        v = self(p)
        if self.source is AmplitudeSource.ANALYTIC_WELL and self.n % 2 == 0:
            return np.imag(v)
        if self.source in (AmplitudeSource.ANALYTIC_BOXCAR, AmplitudeSource.ANALYTIC_WELL):
            return np.real(v)
        ref = self(0.37 * self.feature_scale)
        phase = ref / abs(ref) if abs(ref) > 0 else 1.0
        return np.real(v * np.conj(phase))


def analytic_boxcar_phi(geometry: SlitGeometry, p_y):
    """Closed-form image of the boxcar state, a sinc of width 2πħ/a."""
    a, hbar = geometry.width, geometry.hbar
    x = a * np.asarray(p_y, dtype=float) / (2.0 * hbar)
    out = math.sqrt(a / (2.0 * math.pi * hbar)) * sinc(x)
    return complex(out) if np.ndim(p_y) == 0 else out.astype(complex)


def analytic_well_phi(geometry: SlitGeometry, p_y, n: int = 1):
    """Closed-form image of the n-th well eigenstate.

    The points ``a|p|/ħ = nπ`` are 0/0 and return their finite limits.
    """
    a, hbar = geometry.width, geometry.hbar
    u = a * np.asarray(p_y, dtype=float) / hbar
    au = np.abs(u)
    npi = n * math.pi
    pref = 2.0 * n * math.sqrt(math.pi * a / hbar)
    # f(|u|) = trig(|u|/2) / (n²π² - u²); trig = cos for odd n, sin for even n
    e = au - npi
    near = np.abs(e) < GUARD_BAND
    safe_den = np.where(near, 1.0, (npi - au) * (npi + au))
    if n % 2:
        trig = np.cos(0.5 * au)
        c = -math.sin(0.5 * npi)
    else:
        trig = np.sin(0.5 * au)
        c = math.cos(0.5 * npi)
    # near the singular point trig = c·sin(e/2), den = -e(2nπ + e)
    limit = -c * 0.5 * sinc(0.5 * e) / (2.0 * npi + e)
    f = np.where(near, limit, trig / safe_den)
    if n % 2:
        out = pref * f + 0j
    else:
        out = 1j * pref * np.sign(u) * f
    return complex(out) if np.ndim(p_y) == 0 else np.asarray(out, dtype=complex)


def analytic_well_ground_phi(geometry: SlitGeometry, p_y):
    """Image of the well ground state, ``2√(πa/ħ) cos(ap/2ħ)/(π² - a²p²/ħ²)``."""
    return analytic_well_phi(geometry, p_y, 1)


def analytic_amplitude(state: ApertureState) -> MomentumAmplitude:
    """Closed-form amplitude for a boxcar or well state."""
    g = state.geometry
    if state.kind is StateKind.BOXCAR:
        return MomentumAmplitude(AmplitudeSource.ANALYTIC_BOXCAR, g,
                                 lambda p: analytic_boxcar_phi(g, p), extent=g.width,
                                 state=state)
    if state.kind is StateKind.WELL:
        n = state.n
        return MomentumAmplitude(AmplitudeSource.ANALYTIC_WELL, g,
                                 lambda p: analytic_well_phi(g, p, n), extent=g.width,
                                 n=n, state=state)
    raise ContractError("sampled states have no closed-form amplitude; use numeric_phi")


def fourier_quadrature(y, psi, p, hbar: float = 1.0, weights=None) -> np.ndarray:
    """Composite-Simpson evaluation of ``(2πħ)^(-1/2) ∫ ψ(y) e^(-ipy/ħ) dy``.

    ``y`` must be uniform. The momentum axis is processed in fixed-size
    chunks so memory stays bounded; the chunking is deterministic.
    """
    y = np.asarray(y, dtype=float)
    psi = np.asarray(psi, dtype=complex)
    p = np.atleast_1d(np.asarray(p, dtype=float))
    if weights is None:
        weights = simpson_weights(y.size, y[1] - y[0])
    wpsi = weights * psi / math.sqrt(2.0 * math.pi * hbar)
    out = np.empty(p.size, dtype=complex)
    for start in range(0, p.size, _CHUNK):
        pc = p[start:start + _CHUNK]
        out[start:start + _CHUNK] = np.exp(-1j * np.outer(pc, y) / hbar) @ wpsi
    return out


def numeric_phi(state: ApertureState, p_grid, points: int = DEFAULT_POSITION_SAMPLES
                ) -> MomentumAmplitude:
    """Momentum image of any state by direct Fourier quadrature.

    Analytic states are sampled on ``points`` positions (at least 4096);
    sampled states use their own grid. The returned amplitude carries the
    values on ``p_grid`` and stays callable at arbitrary momenta.
    """
    p_grid = check_uniform(p_grid, "momentum grid")
    if state.kind is not StateKind.SAMPLED and points < 4096:
        raise ContractError("numeric transform needs at least 4096 position samples")
    y, psi = state.grid(points)
    w = simpson_weights(y.size, y[1] - y[0])
    hbar = state.geometry.hbar

    def evaluator(p):
        return fourier_quadrature(y, psi, p, hbar, w)

    values = evaluator(p_grid)
    return MomentumAmplitude(AmplitudeSource.NUMERIC, state.geometry, evaluator,
                             extent=state.width, n=state.n, state=state, p=p_grid,
                             values=values, hermitian=state.is_real)


def default_momentum_grid(geometry: SlitGeometry, half_width_lobes: float = 12.0,
                          points: int = 4801) -> np.ndarray:
    """Symmetric grid ``[-12πħ/a, 12πħ/a]`` with 4801 points by default."""
    top = half_width_lobes * math.pi * geometry.momentum_unit
    return uniform_grid(-top, top, points)


@dataclass(frozen=True, eq=False)
class PatternProfile:
    """Intensity |φ|² sampled on a grid with refined extrema."""

    p: np.ndarray
    intensity: np.ndarray
    maxima: np.ndarray
    minima: np.ndarray
    amplitude: MomentumAmplitude | None = field(default=None, repr=False)

    @property
    def peak(self) -> float:
        return float(self.intensity.max())

    def side_lobe_ratio(self) -> float:
        """First positive-side secondary maximum over the central intensity."""
        tol = 1e-6 * (self.p[1] - self.p[0])
        side = self.maxima[self.maxima > tol]
        if side.size == 0:
            raise ContractError("no side lobe inside the profile window")
        if self.amplitude is not None:
            if float(self.amplitude.intensity(0.0)) == 0.0:
                raise ContractError("pattern has a zero at the centre; side-lobe ratio undefined")
            central = float(self.amplitude.intensity(0.0))
            lobe = float(self.amplitude.intensity(side[0]))
        else:
            central = float(np.interp(0.0, self.p, self.intensity))
            lobe = float(np.interp(side[0], self.p, self.intensity))
        return lobe / central


def _refine_extremum(f, lo: float, hi: float, h: float, tol: float) -> float:
    """Locate a zero of the central-difference derivative of ``f`` by bisection."""
    def d(x):
        return (f(x + h) - f(x - h)) / (2.0 * h)

    dlo, dhi = d(lo), d(hi)
    if np.sign(dlo) == np.sign(dhi) or dlo == 0 or dhi == 0:
        return 0.5 * (lo + hi)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        dm = d(mid)
        if np.sign(dm) == np.sign(dlo):
            lo, dlo = mid, dm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def intensity_profile(amplitude: MomentumAmplitude, p_grid) -> PatternProfile:
    """Sample |φ|² on ``p_grid`` and annotate local extrema.

    Extrema are bracketed by sign changes of the discrete difference and
    then refined by bisection on a finite-difference derivative of the
    amplitude itself.
    """
    p_grid = np.asarray(p_grid, dtype=float)
    if p_grid.size == 0:
        raise ContractError("empty momentum grid")
    p_grid = check_uniform(p_grid, "momentum grid")
    inten = amplitude.intensity(p_grid)
    maxima, minima = [], []
    if p_grid.size >= 3:
        step = p_grid[1] - p_grid[0]
        h = 1e-6 * amplitude.feature_scale
        tol = 1e-12 * max(1.0, float(np.abs(p_grid).max()))
        diff = np.diff(inten)

        def f(x):
            return float(amplitude.intensity(x))

        for i in range(1, p_grid.size - 1):
            left, right = diff[i - 1], diff[i]
            if left > 0 and right <= 0 and not (right == 0 and i + 1 < diff.size and diff[i + 1] > 0):
                maxima.append(_refine_extremum(f, p_grid[i] - step, p_grid[i] + step, h, tol))
            elif left < 0 and right >= 0:
                minima.append(_refine_extremum(f, p_grid[i] - step, p_grid[i] + step, h, tol))
    return PatternProfile(p_grid, inten, np.array(maxima), np.array(minima), amplitude)
