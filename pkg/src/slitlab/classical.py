"""Single-slit Fraunhofer optics and its rewriting in momentum variables.

:func:`substitute_momentum_form` is the same sinc written with ``p_y = p sinθ``
and ``λ = h/p``. The two functions are implemented independently so the
identity between them can be checked numerically.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._numerics import sinc
from .aperture import SlitGeometry
from .errors import DomainError, NoMinimumError

__all__ = [
    "PARAXIAL_LIMIT",
    "ParaxialWarning",
    "ClassicalSetup",
    "ClassicalEstimate",
    "fraunhofer_amplitude",
    "first_minimum_angle",
    "classical_uncertainty_estimate",
    "substitute_momentum_form",
]

PARAXIAL_LIMIT = 0.2  # rad


class ParaxialWarning(UserWarning):
    """Angle large enough that p_y ≈ p sinθ should not be trusted."""


def _check_paraxial(theta) -> None:
    if np.any(np.abs(theta) > PARAXIAL_LIMIT):
        warnings.warn(f"|theta| exceeds {PARAXIAL_LIMIT} rad; outside the paraxial regime",
                      ParaxialWarning, stacklevel=3)


@dataclass(frozen=True)
class ClassicalSetup:
    wavelength: float
    width: float
    theta: float = 0.0

    def __post_init__(self):
        if not (self.wavelength > 0 and math.isfinite(self.wavelength)):
            raise DomainError("wavelength must be positive and finite")
        if not (self.width > 0 and math.isfinite(self.width)):
            raise DomainError("slit width must be positive and finite")
        if not np.all(np.isfinite(self.theta)):
            raise DomainError("theta must be finite")
        _check_paraxial(self.theta)


def fraunhofer_amplitude(setup: ClassicalSetup):
    """``sin(aπ sinθ/λ) / (aπ sinθ/λ)``, equal to 1 at θ = 0."""
    arg = setup.width * math.pi * np.sin(setup.theta) / setup.wavelength
    out = sinc(arg)
    return float(out) if np.ndim(out) == 0 else out


def first_minimum_angle(wavelength: float, width: float) -> float:
    """Angle of the first dark fringe, ``arcsin(λ/a)``.

    Raises
    ------
    NoMinimumError
        If ``λ > a``: the envelope has no zero at any real angle.
    """
    if wavelength <= 0 or width <= 0:
        raise DomainError("wavelength and width must be positive")
    if wavelength > width:
        raise NoMinimumError(f"wavelength {wavelength} exceeds slit width {width}")
    return math.asin(wavelength / width)


class ClassicalEstimate(NamedTuple):
    """Order-of-magnitude spreads from the first dark fringe.

    ``delta_p`` is the half-width ``p sinθ_min`` of the central fringe, not a
    standard deviation.
    """

    delta_y: float
    delta_p: float
    product: float


def classical_uncertainty_estimate(geometry: SlitGeometry) -> ClassicalEstimate:
    """δy = a, δp = pλ/a and their product, which is h identically."""
    lam = geometry.wavelength
    if lam > geometry.width:
        raise NoMinimumError(f"wavelength {lam} exceeds slit width {geometry.width}")
    dy = geometry.width
    dp = geometry.momentum * lam / geometry.width
    return ClassicalEstimate(dy, dp, dy * dp)


def substitute_momentum_form(geometry: SlitGeometry, theta):
    """``sin(a p_y/2ħ) / (a p_y/2ħ)`` with ``p_y = p sinθ``."""
    theta = np.asarray(theta, dtype=float)
    if not np.all(np.isfinite(theta)):
        raise DomainError("theta must be finite")
    _check_paraxial(theta)
    p_y = geometry.momentum * np.sin(theta)
    out = sinc(geometry.width * p_y / (2.0 * geometry.hbar))
    return float(out) if np.ndim(out) == 0 else out
