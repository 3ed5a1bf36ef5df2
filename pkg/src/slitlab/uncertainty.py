"""Position and momentum moments, cutoff scans and pattern zeros.

The second momentum moment of the boxcar state grows without bound. Instead
of assigning it a value, :func:`momentum_moments` evaluates the truncated
moment ``∫_{-P}^{P} p² |φ|² dp`` along a ladder of cutoffs and classifies
the growth.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from ._numerics import aitken_limit, bisect, iterated_aitken, panel_integrals, simpson_weights
from .aperture import ApertureState, StateKind
from .errors import ContractError
from .transform import (AmplitudeSource, MomentumAmplitude, analytic_amplitude,
                        intensity_profile, numeric_phi)

__all__ = [
    "Verdict",
    "CutoffScan",
    "MomentStats",
    "MomentumMoments",
    "position_moments",
    "default_cutoffs",
    "cutoff_scan",
    "momentum_moments",
    "amplitude_for",
    "uncertainty_report",
    "first_pattern_minimum",
    "side_lobe_ratio",
    "parseval_norm",
    "ZERO_THRESHOLD",
]

CONVERGENCE_RTOL = 1e-6
LINEAR_RESIDUAL = 1e-3
ZERO_THRESHOLD = 1e-12


class Verdict(enum.Enum):
    CONVERGENT = "Convergent"
    LINEAR_DIVERGENT = "LinearDivergent"
    OTHER = "Other"


@dataclass(frozen=True)
class CutoffScan:
    """Truncated second moments ``<p²>_P`` along an ascending cutoff ladder.

    ``slope``, ``intercept`` and ``residual`` describe the least-squares
    line through the ladder (``residual`` is relative, ``‖r‖/‖m‖``).
    ``limit`` is the tail-corrected value for convergent scans.
    """

    cutoffs: np.ndarray
    partial_moments: np.ndarray
    slope: float
    intercept: float
    residual: float
    verdict: Verdict
    limit: float | None = None


@dataclass(frozen=True)
class MomentumMoments:
    mean_p: float
    second_moment_p: float | None
    delta_p: float | None
    scan: CutoffScan

    @property
    def divergent(self) -> bool:
        return self.scan.verdict is not Verdict.CONVERGENT

    @property
    def growth_rate(self) -> float | None:
        return self.scan.slope if self.divergent else None


@dataclass(frozen=True)
class MomentStats:
    """Moments of one aperture state.

    Momentum quantities are ``None`` when the second moment diverges; the
    divergence is then described by ``growth_rate`` (slope of ``<p²>_P``
    per unit cutoff) and ``scan``.
    """

    mean_y: float
    var_y: float
    mean_p: float
    second_moment_p: float | None
    delta_p: float | None
    product_dy_dp: float | None
    scan: CutoffScan
    hbar: float

    @property
    def delta_y(self) -> float:
        return math.sqrt(self.var_y)

    @property
    def divergent(self) -> bool:
        return self.second_moment_p is None

    @property
    def growth_rate(self) -> float | None:
        return self.scan.slope if self.divergent else None


def position_moments(state: ApertureState) -> tuple[float, float]:
    """Return ``(<y>, Var y)``.

    Closed forms for the analytic kinds (``a²/12`` for the boxcar and
    ``a²(1/12 - 1/(2n²π²))`` for the n-th well level), Simpson quadrature
    for sampled states.
    """
    a = state.width
    if state.kind is StateKind.BOXCAR:
        return 0.0, a * a / 12.0
    if state.kind is StateKind.WELL:
        n = state.n
        return 0.0, a * a * (1.0 / 12.0 - 1.0 / (2.0 * (n * math.pi) ** 2))
    y, psi = state.y, state.samples
    w = simpson_weights(y.size, y[1] - y[0]) * np.abs(psi) ** 2
    mean = float(np.dot(w, y))
    var = float(np.dot(w, (y - mean) ** 2))
    return mean, var


def default_cutoffs(amplitude: MomentumAmplitude) -> np.ndarray:
    """Cutoff ladder ``2^k · πħ/a``.

    Closed-form amplitudes use ``k = 3..19``; the top rungs are needed
    because a slit state with a kink at the edges has a ``1/P`` tail in
    ``<p²>_P``, which only drops below the 1e-6 convergence test there. Quadrature-backed amplitudes
    stop at ``k = 8`` and start at ``k = 1`` (eight rungs): beyond that
    the Simpson image of a sampled state is no longer trustworthy and the
    cost grows with every rung.
    """
    unit = math.pi * amplitude.geometry.hbar / amplitude.geometry.width
    ks = np.arange(3, 20) if _analytic_like(amplitude) else np.arange(1, 9)
    return unit * 2.0 ** ks


def _analytic_like(amplitude: MomentumAmplitude) -> bool:
    """Closed form, or N copies of a closed-form single slit."""
    if amplitude.source in (AmplitudeSource.ANALYTIC_BOXCAR, AmplitudeSource.ANALYTIC_WELL):
        return True
    return (amplitude.source is AmplitudeSource.COMPOSED
            and bool(getattr(amplitude.state, "analytic_base", False)))


def cutoff_scan(amplitude: MomentumAmplitude, cutoffs=None) -> CutoffScan:
    """Evaluate and classify ``<p²>_P`` over a cutoff ladder.

    Convergent when the shell between the last two cutoffs adds less than
    1e-6 of the running value; linear divergence when a straight line fits
    the ladder with relative residual below 1e-3; anything else is
    ``Other``.
    """
    if cutoffs is None:
        cutoffs = default_cutoffs(amplitude)
    cutoffs = np.asarray(cutoffs, dtype=float)
    if cutoffs.ndim != 1 or cutoffs.size < 8:
        raise ContractError("cutoff ladder needs at least 8 entries")
    if not np.all(np.isfinite(cutoffs)) or cutoffs[0] <= 0 or np.any(np.diff(cutoffs) <= 0):
        raise ContractError("cutoffs must be positive, finite and strictly ascending")

    def integrand(p):
        return p * p * amplitude.intensity(p)

    shells = panel_integrals(integrand, cutoffs, amplitude.feature_scale)
    moments = np.maximum.accumulate(np.cumsum(shells))
    slope, intercept = np.polyfit(cutoffs, moments, 1)
    fit = slope * cutoffs + intercept
    residual = float(np.linalg.norm(moments - fit) / np.linalg.norm(moments))
    limit = None
    if moments[-1] - moments[-2] < CONVERGENCE_RTOL * moments[-1]:
        verdict = Verdict.CONVERGENT
        limit = aitken_limit(*moments[-3:])
    elif residual < LINEAR_RESIDUAL:
        verdict = Verdict.LINEAR_DIVERGENT
    else:
        verdict = Verdict.OTHER
    return CutoffScan(cutoffs, moments, float(slope), float(intercept), residual, verdict, limit)


def _mean_momentum(amplitude: MomentumAmplitude, top: float) -> float:
    if amplitude.hermitian:
        # |φ(-p)| = |φ(p)|, so the first moment cancels exactly
        return 0.0
    return float(panel_integrals(lambda p: p * amplitude.intensity(p), [top],
                                 amplitude.feature_scale)[0])


def momentum_moments(amplitude: MomentumAmplitude, cutoffs=None) -> MomentumMoments:
    """Momentum mean, second moment and spread, with the supporting scan.

    For a well eigenstate the closed form ``(nπħ/a)²`` is reported and the
    scan serves as its cross-check; other convergent amplitudes report the
    tail-corrected scan limit.
    """
    scan = cutoff_scan(amplitude, cutoffs)
    mean_p = _mean_momentum(amplitude, float(scan.cutoffs[-1]))
    if scan.verdict is not Verdict.CONVERGENT:
        return MomentumMoments(mean_p, None, None, scan)
    if amplitude.source is AmplitudeSource.ANALYTIC_WELL:
        g = amplitude.geometry
        second = (amplitude.n * math.pi * g.hbar / g.width) ** 2
    else:
        second = float(scan.limit)
    return MomentumMoments(mean_p, second, math.sqrt(max(second - mean_p ** 2, 0.0)), scan)


def amplitude_for(state: ApertureState) -> MomentumAmplitude:
    """Closed-form amplitude where one exists, quadrature otherwise."""
    if state.kind is StateKind.SAMPLED:
        return numeric_phi(state, [0.0, 1.0])
    return analytic_amplitude(state)


def uncertainty_report(state: ApertureState, cutoffs=None) -> MomentStats:
    """Position and momentum spreads of ``state`` and their product."""
    mean_y, var_y = position_moments(state)
    mm = momentum_moments(amplitude_for(state), cutoffs)
    product = None
    if mm.delta_p is not None:
        product = math.sqrt(var_y) * mm.delta_p
    return MomentStats(mean_y, var_y, mm.mean_p, mm.second_moment_p, mm.delta_p,
                       product, mm.scan, state.geometry.hbar)


def first_pattern_minimum(amplitude: MomentumAmplitude, search_lobes: int = 64) -> float:
    """Smallest ``p > 0`` where the pattern has a true zero.

    Zeros are bracketed by sign changes of the real-valued amplitude on a
    grid eight times finer than the narrowest lobe, refined by bisection,
    and accepted only if the normalized intensity there is below 1e-12.
    Removable 0/0 points of the closed forms are finite and never change
    sign, so they cannot be returned.
    """
    step = amplitude.feature_scale / 8.0
    central = float(amplitude.intensity(0.0))
    if central <= 0:
        central = float(np.max(amplitude.intensity(np.arange(1, 64) * step)))
    block = 512
    start = 0.0
    limit = search_lobes * amplitude.feature_scale

    def g(x):
        return float(amplitude.signed(x))

    while start < limit:
        grid = start + step * np.arange(1, block + 1)
        if start == 0.0:
            grid = np.concatenate([[step * 1e-3], grid])
        else:
            grid = np.concatenate([[start], grid])
        vals = amplitude.signed(grid)
        for i in range(grid.size - 1):
            if vals[i] == 0.0 and grid[i] > 0:
                if amplitude.intensity(grid[i]) / central < ZERO_THRESHOLD:
                    return float(grid[i])
            if vals[i] * vals[i + 1] < 0:
                root = bisect(g, float(grid[i]), float(grid[i + 1]))
                if amplitude.intensity(root) / central < ZERO_THRESHOLD:
                    return root
        start = float(grid[-1])
    raise ContractError("no pattern zero found inside the search window")


def side_lobe_ratio(amplitude: MomentumAmplitude, lobes: float = 12.0,
                    points: int = 4801) -> float:
    """Intensity of the first secondary maximum relative to the centre."""
    top = lobes * amplitude.feature_scale
    p = np.linspace(0.0, top, points)
    return intensity_profile(amplitude, np.concatenate([-p[:0:-1], p])).side_lobe_ratio()


def parseval_norm(amplitude: MomentumAmplitude, first: int | None = None) -> float:
    """``∫|φ|² dp`` with the tail beyond the window removed by extrapolation.

    Partial norms are taken on windows ``2^k · 2πħ/a`` for five successive
    ``k`` (multiples of the single-slit lobe period, where the oscillating
    tail terms vanish) and combined by iterated Aitken extrapolation.
    """
    if first is None:
        first = 8 if _analytic_like(amplitude) else 2
    period = 2.0 * np.pi * amplitude.geometry.hbar / amplitude.geometry.width
    windows = period * 2.0 ** np.arange(first, first + 5)
    shells = panel_integrals(amplitude.intensity, windows, amplitude.feature_scale)
    return iterated_aitken(np.cumsum(shells))
