"""Position-space states of a particle confined to a slit.

The slit is centred on ``y = 0`` with support ``[-a/2, a/2]``. Two analytic
models are provided, the constant (boxcar) amplitude and the eigenstates of
an infinitely deep well spanning the slit, plus user-sampled states.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from ._numerics import check_uniform, simpson_weights
from .errors import DomainError, GeometryError, OverlapError

__all__ = [
    "SlitGeometry",
    "StateKind",
    "ApertureState",
    "Transmission",
    "evaluate_psi",
    "ground_state_energy",
    "transmission_allowed",
    "DEFAULT_POSITION_SAMPLES",
]

DEFAULT_POSITION_SAMPLES = 4097


@dataclass(frozen=True)
class SlitGeometry:
    """Slit width, slit array layout, incident beam and unit system.

    The de Broglie wavelength is always derived from ``momentum`` and never
    stored. ``spacing`` is the centre-to-centre distance and is required
    only when ``slit_count >= 2``.
    """

    width: float = 1.0
    momentum: float = 20.0 * math.pi
    hbar: float = 1.0
    mass: float = 1.0
    slit_count: int = 1
    spacing: float | None = None

    def __post_init__(self):
        for name in ("width", "momentum", "hbar", "mass"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise GeometryError(f"{name} must be a finite positive number, got {v!r}")
        if int(self.slit_count) != self.slit_count or self.slit_count < 1:
            raise GeometryError(f"slit_count must be an integer >= 1, got {self.slit_count!r}")
        if self.slit_count >= 2:
            if self.spacing is None or not math.isfinite(self.spacing):
                raise GeometryError("spacing is required when slit_count >= 2")
            if self.spacing < self.width:
                raise OverlapError(
                    f"spacing {self.spacing} is smaller than the slit width {self.width}")

    @property
    def planck(self) -> float:
        """h = 2πħ."""
        return 2.0 * math.pi * self.hbar

    @property
    def wavelength(self) -> float:
        return self.planck / self.momentum

    @property
    def momentum_unit(self) -> float:
        """ħ/a, the natural momentum scale of the slit."""
        return self.hbar / self.width


class StateKind(enum.Enum):
    BOXCAR = "boxcar"
    WELL = "well"
    SAMPLED = "sampled"


@dataclass(frozen=True, eq=False)
class ApertureState:
    """A normalized wavefunction living on the slit opening.

    Use the constructors :meth:`boxcar`, :meth:`well` and :meth:`sampled`
    rather than building instances by hand.
    """

    kind: StateKind
    geometry: SlitGeometry
    n: int = 1
    y: np.ndarray | None = field(default=None, repr=False)
    samples: np.ndarray | None = field(default=None, repr=False)

    @classmethod
    def boxcar(cls, geometry: SlitGeometry) -> "ApertureState":
        return cls(StateKind.BOXCAR, geometry)

    @classmethod
    def well(cls, geometry: SlitGeometry, n: int = 1) -> "ApertureState":
        if int(n) != n or n < 1:
            raise DomainError(f"well quantum number must be an integer >= 1, got {n!r}")
        return cls(StateKind.WELL, geometry, n=int(n))

    @classmethod
    def sampled(cls, geometry: SlitGeometry, values) -> "ApertureState":
        """Wrap uniformly spaced samples covering ``[-a/2, a/2]`` inclusive.

        The samples are renormalized with the same Simpson rule that the
        Fourier quadrature uses.
        """
        values = np.asarray(values, dtype=complex)
        if values.ndim != 1 or values.size < 3:
            raise DomainError("sampled state needs a 1-D array of at least 3 values")
        if not np.all(np.isfinite(values)):
            raise DomainError("sampled state contains non-finite values")
        a = geometry.width
        y = np.linspace(-0.5 * a, 0.5 * a, values.size)
        norm = np.dot(simpson_weights(values.size, y[1] - y[0]), np.abs(values) ** 2)
        if not norm > 0:
            raise DomainError("sampled state is identically zero")
        values = values / math.sqrt(norm)
        values.setflags(write=False)
        y.setflags(write=False)
        return cls(StateKind.SAMPLED, geometry, y=y, samples=values)

    @classmethod
    def from_samples(cls, y, values, hbar: float = 1.0, mass: float = 1.0,
                     momentum: float = 20.0 * math.pi) -> "ApertureState":
        """Build a sampled state from explicit coordinates.

        ``y`` must be uniform; the slit width is taken from its extent and the
        coordinates are re-centred on zero.
        """
        y = check_uniform(y, "y", min_points=3)
        geometry = SlitGeometry(width=float(y[-1] - y[0]), momentum=momentum,
                                hbar=hbar, mass=mass)
        return cls.sampled(geometry, values)

    @property
    def width(self) -> float:
        return self.geometry.width

    @property
    def is_real(self) -> bool:
        if self.kind is StateKind.SAMPLED:
            return bool(np.all(self.samples.imag == 0))
        return True

    @property
    def parity(self) -> int | None:
        """+1 for even states, -1 for odd ones, ``None`` when not definite."""
        if self.kind is StateKind.BOXCAR:
            return 1
        if self.kind is StateKind.WELL:
            return 1 if self.n % 2 else -1
        s = self.samples
        if np.allclose(s, s[::-1], rtol=0, atol=1e-12):
            return 1
        if np.allclose(s, -s[::-1], rtol=0, atol=1e-12):
            return -1
        return None

    def __call__(self, y):
        return evaluate_psi(self, y)

    def grid(self, points: int = DEFAULT_POSITION_SAMPLES) -> tuple[np.ndarray, np.ndarray]:
        """Sample positions and amplitudes on the slit, endpoints included.

        Sampled states always return their own grid and ignore ``points``.
        """
        if self.kind is StateKind.SAMPLED:
            return self.y, self.samples
        a = self.width
        y = np.linspace(-0.5 * a, 0.5 * a, points)
        return y, evaluate_psi(self, y)


def evaluate_psi(state: ApertureState, y):
    """Evaluate ψ(y); exactly zero outside the slit.

    Parameters
    ----------
    state : ApertureState
    y : float or array_like
        Position(s). Must be finite.

    Returns
    -------
    complex or ndarray of complex
    """
    scalar = np.ndim(y) == 0
    y = np.asarray(y, dtype=float)
    if not np.all(np.isfinite(y)):
        raise DomainError("position must be finite")
    a = state.width
    inside = np.abs(y) <= 0.5 * a
    if state.kind is StateKind.BOXCAR:
        out = np.where(inside, 1.0 / math.sqrt(a), 0.0).astype(complex)
    elif state.kind is StateKind.WELL:
        val = math.sqrt(2.0 / a) * np.sin(state.n * math.pi * (y + 0.5 * a) / a)
        out = np.where(inside, val, 0.0).astype(complex)
        # sin(nπ) is not exactly zero in floating point
        out[np.abs(y) == 0.5 * a] = 0.0
    else:
        re = np.interp(y, state.y, state.samples.real)
        im = np.interp(y, state.y, state.samples.imag)
        out = np.where(inside, re + 1j * im, 0.0)
    return complex(out) if scalar else out


def ground_state_energy(geometry: SlitGeometry, n: int = 1) -> float:
    """Energy ``n² (πħ/a)² / 2μ`` of the n-th level of the slit well."""
    if int(n) != n or n < 1:
        raise DomainError(f"quantum number must be an integer >= 1, got {n!r}")
    return (n * math.pi * geometry.hbar / geometry.width) ** 2 / (2.0 * geometry.mass)


class Transmission(NamedTuple):
    allowed: bool
    pz: float | None
    incident_energy: float
    confinement_energy: float


def transmission_allowed(geometry: SlitGeometry) -> Transmission:
    """Energy bookkeeping for a particle entering the slit.

    Passage requires the incident energy ``p²/2μ`` to cover the confinement
    energy of the lowest well level; what remains goes into the longitudinal
    momentum ``pz``. The comparison is made on momenta (``p >= πħ/a``) so
    that the threshold case is decided exactly.
    """
    p = geometry.momentum
    threshold = math.pi * geometry.hbar / geometry.width
    e0 = p * p / (2.0 * geometry.mass)
    ey = ground_state_energy(geometry, 1)
    if p < threshold:
        return Transmission(False, None, e0, ey)
    pz = math.sqrt((p - threshold) * (p + threshold))
    return Transmission(True, pz, e0, ey)
