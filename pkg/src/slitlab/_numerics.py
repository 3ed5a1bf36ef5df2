"""Small numerical kernels shared by the transform and analysis modules.

Everything here works on plain numpy arrays and knows nothing about
wavefunctions or slits.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from .errors import ContractError

# Below this |t| the sinc family switches to its Taylor series.
GUARD_BAND = 1e-4

_GL_NODES = 16
_gl_x, _gl_w = np.polynomial.legendre.leggauss(_GL_NODES)


def sinc(t):
    """Unnormalized sinc, ``sin(t)/t``, with the removable point handled.

    Inside ``|t| < GUARD_BAND`` the series ``1 - t**2/6 + t**4/120`` is used,
    which is accurate to ~1e-26 there and keeps the function continuous.
    """
    t = np.asarray(t)
    small = np.abs(t) < GUARD_BAND
    safe = np.where(small, 1.0, t)
    t2 = t * t
    return np.where(small, 1.0 - t2 / 6.0 + t2 * t2 / 120.0, np.sin(safe) / safe)


def simpson_weights(n: int, dx: float) -> np.ndarray:
    """Composite Simpson weights for ``n`` uniformly spaced samples.

    Odd ``n`` gives the classic 1-4-2-...-4-1 pattern. For even ``n`` the
    first ``n - 1`` points use the classic rule and the last interval is
    closed with the quadratic through the final three samples,
    ``dx * (-1, 8, 5) / 12``.
    """
    if n < 3:
        raise ContractError(f"Simpson quadrature needs at least 3 samples, got {n}")
    m = n if n % 2 else n - 1
    w = np.ones(m)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    w *= dx / 3.0
    if m == n:
        return w
    out = np.zeros(n)
    out[:m] = w
    out[-3:] += dx * np.array([-1.0, 8.0, 5.0]) / 12.0
    return out


def check_uniform(x, name: str = "grid", min_points: int = 2) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size < min_points:
        raise ContractError(f"{name} must be 1-D with at least {min_points} points")
    if not np.all(np.isfinite(x)):
        raise ContractError(f"{name} contains non-finite values")
    if x.size > 2:
        steps = np.diff(x)
        if np.any(steps <= 0) or np.ptp(steps) > 1e-9 * abs(steps.mean()) * max(1, x.size):
            raise ContractError(f"{name} must be uniformly spaced and increasing")
    elif x.size == 2 and x[1] <= x[0]:
        raise ContractError(f"{name} must be increasing")
    return x


def uniform_grid(lo: float, hi: float, points: int) -> np.ndarray:
    """``np.linspace`` that is exactly antisymmetric when ``lo == -hi``."""
    g = np.linspace(lo, hi, points)
    if lo == -hi:
        g = 0.5 * (g - g[::-1])
    return g


def panel_integrals(f: Callable[[np.ndarray], np.ndarray], edges: Sequence[float],
                    panel: float) -> np.ndarray:
    """Integrate ``f`` over the symmetric shells between successive ``edges``.

    Returns ``I[k] = ∫ f`` over ``[-edges[0], edges[0]]`` for ``k = 0`` and
    over ``[-edges[k], -edges[k-1]] ∪ [edges[k-1], edges[k]]`` afterwards.
    Each shell is cut into panels no wider than ``panel`` and every panel
    gets a fixed Gauss-Legendre rule, so oscillatory integrands are fine as
    long as ``panel`` is about one lobe.
    """
    edges = np.asarray(edges, dtype=float)
    bounds = np.concatenate([[0.0], edges])
    out = np.empty(edges.size)
    for k in range(edges.size):
        lo, hi = bounds[k], bounds[k + 1]
        npan = max(1, int(np.ceil((hi - lo) / panel - 1e-9)))
        left = lo + (hi - lo) * np.arange(npan) / npan
        half = 0.5 * (hi - lo) / npan
        nodes = (left[:, None] + half * (1.0 + _gl_x[None, :])).ravel()
        pts = np.concatenate([nodes, -nodes])
        vals = np.asarray(f(pts), dtype=float)
        wts = np.tile(half * _gl_w, npan)
        out[k] = np.dot(np.concatenate([wts, wts]), vals)
    return out


def aitken_limit(s0: float, s1: float, s2: float) -> float:
    """Aitken delta-squared extrapolation of three successive partial sums."""
    d1, d2 = s1 - s0, s2 - s1
    denom = d1 - d2
    if denom == 0.0 or d1 == 0.0 or d2 / d1 <= 0.0 or d2 / d1 >= 1.0:
        return s2
    return s2 - d2 * d2 / (d2 - d1)


def iterated_aitken(sums) -> float:
    """Apply :func:`aitken_limit` repeatedly until one value is left."""
    s = [float(v) for v in sums]
    while len(s) >= 3:
        s = [aitken_limit(*s[i:i + 3]) for i in range(len(s) - 2)]
    return s[-1]


def bisect(g: Callable[[float], float], lo: float, hi: float, rtol: float = 1e-13,
           maxiter: int = 200) -> float:
    """Bisection for a sign change of ``g`` on ``[lo, hi]``.

    Stops when the bracket is narrower than ``rtol * |midpoint|`` or when
    the midpoint can no longer be represented between the endpoints.
    """
    glo, ghi = g(lo), g(hi)
    if glo == 0.0:
        return lo
    if ghi == 0.0:
        return hi
    if np.sign(glo) == np.sign(ghi):
        raise ContractError(f"no sign change on [{lo}, {hi}]")
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi or (hi - lo) <= rtol * abs(mid):
            break
        gm = g(mid)
        if gm == 0.0:
            return mid
        if np.sign(gm) == np.sign(glo):
            lo, glo = mid, gm
        else:
            hi = mid
    return 0.5 * (lo + hi)
