"""N identical slits built from translated copies of one aperture state.

Slit j sits at ``y_j = (j - (N-1)/2) d``, every copy carries weight
``1/sqrt(N)`` and no relative phase (uniform plane-wave illumination).
Because ``d >= a`` the copies never overlap, so the composed state is
normalized whenever the base state is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._numerics import GUARD_BAND, check_uniform, simpson_weights
from .aperture import DEFAULT_POSITION_SAMPLES, ApertureState, SlitGeometry, StateKind
from .errors import GeometryError, OverlapError
from .transform import (AmplitudeSource, MomentumAmplitude, analytic_amplitude,
                        fourier_quadrature, numeric_phi)

__all__ = [
    "MultiSlitState",
    "array_factor",
    "array_sum",
    "compose_momentum_amplitude",
    "direct_multislit_phi",
]


@dataclass(frozen=True, eq=False)
class MultiSlitState:
    base: ApertureState
    count: int
    spacing: float

    def __post_init__(self):
        if int(self.count) != self.count or self.count < 1:
            raise GeometryError(f"slit count must be an integer >= 1, got {self.count!r}")
        if self.count >= 2 and not self.spacing >= self.base.width:
            raise OverlapError(
                f"spacing {self.spacing} is smaller than the slit width {self.base.width}")

    @classmethod
    def from_geometry(cls, base: ApertureState, geometry: SlitGeometry) -> "MultiSlitState":
        return cls(base, geometry.slit_count, geometry.spacing or geometry.width)

    @property
    def geometry(self) -> SlitGeometry:
        g = self.base.geometry
        return SlitGeometry(width=g.width, momentum=g.momentum, hbar=g.hbar, mass=g.mass,
                            slit_count=self.count,
                            spacing=self.spacing if self.count >= 2 else None)

    @property
    def centers(self) -> np.ndarray:
        j = np.arange(self.count)
        return (j - 0.5 * (self.count - 1)) * self.spacing

    @property
    def extent(self) -> float:
        return (self.count - 1) * self.spacing + self.base.width

    @property
    def analytic_base(self) -> bool:
        return self.base.kind is not StateKind.SAMPLED

    def __call__(self, y):
        y = np.asarray(y, dtype=float)
        total = np.zeros(y.shape, dtype=complex)
        for c in self.centers:
            total = total + self.base(y - c)
        return total / math.sqrt(self.count)

    def segments(self, points: int = DEFAULT_POSITION_SAMPLES):
        """Per-slit ``(y, ψ)`` samples of the composed wavefunction.

        Each slit gets its own uniform grid with the slit edges as end
        points, which keeps Simpson's rule exact to high order even when
        the base state jumps at the edges.
        """
        y0, psi0 = self.base.grid(points)
        scale = 1.0 / math.sqrt(self.count)
        return [(y0 + c, psi0 * scale) for c in self.centers]

    def position_moments(self) -> tuple[float, float]:
        """``(<y>, Var y)`` from the base moments and the slit centres."""
        from .uncertainty import position_moments
        mean0, var0 = position_moments(self.base)
        c = self.centers
        mean = mean0 + float(c.mean())
        var = var0 + mean0 ** 2 + float(np.mean(c ** 2)) + 2 * mean0 * float(c.mean()) - mean ** 2
        return mean, var


def array_sum(p, count: int, spacing: float, hbar: float = 1.0):
    """``Σ_j exp(-i p y_j/ħ) = sin(N x)/sin(x)`` with ``x = p d / 2ħ``.

    Real because the centres are symmetric about zero. At ``x = mπ`` the
    limit ``(-1)^((N-1)m) N`` is used.
    """
    x = np.asarray(p, dtype=float) * spacing / (2.0 * hbar)
    m = np.rint(x / math.pi)
    e = x - m * math.pi
    sign = np.where((((count - 1) * m) % 2) == 0, 1.0, -1.0)
    near = np.abs(e) < GUARD_BAND
    safe = np.where(near, 1.0, e)
    ratio = np.where(near, count * (1.0 - (count * count - 1) * e * e / 6.0),
                     np.sin(count * safe) / np.sin(safe))
    return sign * ratio


def array_factor(p, count: int, spacing: float, hbar: float = 1.0):
    """Intensity modulation ``(1/N) (sin(N x)/sin(x))²``; equals N on principal maxima."""
    return array_sum(p, count, spacing, hbar) ** 2 / count


def compose_momentum_amplitude(multi: MultiSlitState, p_grid=None,
                               base_amplitude: MomentumAmplitude | None = None
                               ) -> MomentumAmplitude:
    """φ_N(p) = φ_1(p) · Σ_j e^(-i p y_j/ħ) / sqrt(N), by the translation theorem.

    The single-slit factor is the closed form for analytic bases and the
    Fourier quadrature for sampled ones, unless ``base_amplitude`` is given.
    """
    if base_amplitude is None:
        if multi.base.kind is StateKind.SAMPLED:
            base_amplitude = numeric_phi(multi.base, [0.0, 1.0])
        else:
            base_amplitude = analytic_amplitude(multi.base)
    g = multi.base.geometry
    count, spacing = multi.count, multi.spacing

    def evaluator(p):
        return base_amplitude(p) * array_sum(p, count, spacing, g.hbar) / math.sqrt(count)

    values = None
    if p_grid is not None:
        p_grid = check_uniform(p_grid, "momentum grid")
        values = evaluator(p_grid)
    return MomentumAmplitude(AmplitudeSource.COMPOSED, multi.geometry, evaluator,
                             extent=multi.extent, n=multi.base.n, state=multi, p=p_grid,
                             values=values, hermitian=base_amplitude.hermitian)


def direct_multislit_phi(multi: MultiSlitState, p, points: int = DEFAULT_POSITION_SAMPLES):
    """Fourier quadrature of the sampled N-slit wavefunction, slit by slit.

    Independent of the array-factor algebra; used to cross-check
    :func:`compose_momentum_amplitude`.
    """
    p = np.atleast_1d(np.asarray(p, dtype=float))
    hbar = multi.base.geometry.hbar
    total = np.zeros(p.size, dtype=complex)
    for y, psi in multi.segments(points):
        w = simpson_weights(y.size, y[1] - y[0])
        total += fourier_quadrature(y, psi, p, hbar, w)
    return total
