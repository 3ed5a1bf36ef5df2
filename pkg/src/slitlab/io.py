"""Text formats: sampled apertures, pattern CSV and JSON reports."""

from __future__ import annotations

import io
import json
import math

import numpy as np

from .aperture import DEFAULT_POSITION_SAMPLES, ApertureState
from .errors import ConfigError

__all__ = ["load_sampled", "write_sampled", "fmt", "rounded", "pattern_csv", "dump_json"]

SIG_DIGITS = 12


def fmt(x: float) -> str:
    """Decimal text with 12 significant digits."""
    return f"{x:.{SIG_DIGITS}g}"


def rounded(obj):
    """Recursively round floats to 12 significant digits for JSON output."""
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return None
        return float(fmt(obj))
    if isinstance(obj, (np.floating, np.integer)):
        return rounded(obj.item())
    if isinstance(obj, dict):
        return {k: rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [rounded(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [rounded(v) for v in obj.tolist()]
    return obj


def dump_json(obj) -> str:
    return json.dumps(rounded(obj), indent=2) + "\n"


def load_sampled(path, hbar: float = 1.0, mass: float = 1.0,
                 momentum: float = 20.0 * math.pi) -> ApertureState:
    """Read ``y  Re ψ  [Im ψ]`` columns (whitespace separated, ``#`` comments)."""
    try:
        data = np.loadtxt(path, ndmin=2)
    except ValueError as exc:
        raise ConfigError(f"cannot parse sampled aperture {path}: {exc}") from exc
    if data.shape[1] not in (2, 3):
        raise ConfigError(f"{path}: expected 2 or 3 columns, found {data.shape[1]}")
    values = data[:, 1] + (1j * data[:, 2] if data.shape[1] == 3 else 0.0)
    try:
        return ApertureState.from_samples(data[:, 0], values, hbar=hbar, mass=mass,
                                          momentum=momentum)
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from exc


def write_sampled(path, state: ApertureState, points: int = DEFAULT_POSITION_SAMPLES) -> None:
    y, psi = state.grid(points)
    buf = io.StringIO()
    buf.write("# y re_psi im_psi\n")
    for yi, v in zip(y, psi):
        buf.write(f"{yi:.17g} {v.real:.17g} {v.imag:.17g}\n")
    with open(path, "w") as fh:
        fh.write(buf.getvalue())


def pattern_csv(p, columns: dict[str, np.ndarray]) -> str:
    names = ["p_y", *columns]
    rows = [",".join(names)]
    cols = [np.asarray(p), *(np.asarray(c) for c in columns.values())]
    for i in range(len(cols[0])):
        rows.append(",".join(fmt(float(c[i])) for c in cols))
    return "\n".join(rows) + "\n"
