"""Command-line front end.

Usage::

    slitlab pattern --config run.cfg --out pattern.csv
    slitlab report  --model well --a 1 --p 2.5
    slitlab compare --grid -40:40:8001

Exit codes: 0 success, 1 configuration error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import configparser
import math
import re
import sys
from dataclasses import dataclass, field, replace

import numpy as np

from . import __version__
from ._numerics import uniform_grid
from .aperture import ApertureState, SlitGeometry, transmission_allowed
from .classical import classical_uncertainty_estimate, first_minimum_angle
from .errors import ConfigError, NoMinimumError, SlitlabError
from .io import dump_json, load_sampled, pattern_csv
from .multislit import MultiSlitState, compose_momentum_amplitude
from .transform import analytic_amplitude, numeric_phi
from .uncertainty import (first_pattern_minimum, momentum_moments, position_moments,
                          side_lobe_ratio)

__all__ = ["RunConfig", "load_config", "cmd_pattern", "cmd_report", "cmd_compare", "main"]

MODELS = ("boxcar", "well", "sampled", "multislit")
_PI_RE = re.compile(r"^\s*([+-]?[0-9.eE+-]*)\s*\*?\s*pi\s*$")


def parse_quantity(text: str) -> float:
    """Parse ``3.5``, ``pi``, ``-12pi`` or ``20*pi``."""
    s = str(text).strip()
    m = _PI_RE.match(s)
    try:
        if m:
            coef = m.group(1)
            if coef in ("", "+"):
                return math.pi
            if coef == "-":
                return -math.pi
            return float(coef) * math.pi
        return float(s)
    except ValueError:
        raise ConfigError(f"not a number: {text!r}") from None


@dataclass(frozen=True)
class RunConfig:
    model: str = "well"
    sampled_path: str | None = None
    base: str = "well"
    slit_count: int = 2
    spacing: float | None = None
    hbar: float = 1.0
    mass: float = 1.0
    width: float = 1.0
    momentum: float | None = None
    p_min: float | None = None
    p_max: float | None = None
    points: int = 4801
    outputs: dict = field(default_factory=dict)

    def validate(self) -> "RunConfig":
        if self.model not in MODELS:
            raise ConfigError(f"unknown model {self.model!r}; expected one of {MODELS}")
        if self.model == "sampled" and not self.sampled_path:
            raise ConfigError("model 'sampled' needs a file path (sampled:<path>)")
        if self.model == "multislit":
            if self.base not in ("boxcar", "well"):
                raise ConfigError(f"multislit base must be boxcar or well, got {self.base!r}")
            if self.slit_count < 1:
                raise ConfigError("slit count must be >= 1")
        for name in ("hbar", "mass", "width"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ConfigError(f"{name} must be positive, got {v}")
        if self.momentum is not None and not (math.isfinite(self.momentum) and self.momentum > 0):
            raise ConfigError(f"momentum must be positive, got {self.momentum}")
        if self.points < 16:
            raise ConfigError(f"grid needs at least 16 points, got {self.points}")
        lo, hi = self.grid_bounds
        if not lo < hi:
            raise ConfigError(f"grid minimum {lo} must be below maximum {hi}")
        return self

    @property
    def incident_momentum(self) -> float:
        if self.momentum is not None:
            return self.momentum
        return 20.0 * math.pi * self.hbar / self.width

    @property
    def grid_bounds(self) -> tuple[float, float]:
        top = 12.0 * math.pi * self.hbar / self.width
        lo = -top if self.p_min is None else self.p_min
        hi = top if self.p_max is None else self.p_max
        return lo, hi

    def grid(self) -> np.ndarray:
        lo, hi = self.grid_bounds
        return uniform_grid(lo, hi, self.points)

    def geometry(self) -> SlitGeometry:
        try:
            return SlitGeometry(width=self.width, momentum=self.incident_momentum,
                                hbar=self.hbar, mass=self.mass)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc


_KEY_ALIASES = {
    "a": "width", "width_a": "width", "width": "width",
    "p": "momentum", "momentum_p": "momentum", "momentum": "momentum",
    "hbar": "hbar", "mass": "mass", "mu": "mass",
    "p_min": "p_min", "p_max": "p_max", "points": "points",
    "n": "slit_count", "slit_count": "slit_count",
    "d": "spacing", "spacing": "spacing", "base": "base",
    "model": "model", "grid": "grid", "sampled": "sampled_path",
    "pattern_csv": "pattern_csv", "report_json": "report_json", "compare_json": "compare_json",
}
_OUTPUT_KEYS = ("pattern_csv", "report_json", "compare_json")


def _apply(cfg: RunConfig, key: str, value: str) -> RunConfig:
    name = _KEY_ALIASES.get(key.strip().lower())
    if name is None:
        raise ConfigError(f"unknown config key {key!r}")
    value = str(value).strip()
    if name == "model":
        return _apply_model(cfg, value)
    if name == "grid":
        parts = value.split(":")
        if len(parts) != 3:
            raise ConfigError(f"grid must be min:max:points, got {value!r}")
        cfg = replace(cfg, p_min=parse_quantity(parts[0]), p_max=parse_quantity(parts[1]))
        return _apply(cfg, "points", parts[2])
    if name in _OUTPUT_KEYS:
        return replace(cfg, outputs={**cfg.outputs, name: value})
    if name in ("points", "slit_count"):
        try:
            return replace(cfg, **{name: int(value)})
        except ValueError:
            raise ConfigError(f"{key} must be an integer, got {value!r}") from None
    if name in ("base", "sampled_path"):
        return replace(cfg, **{name: value})
    return replace(cfg, **{name: parse_quantity(value)})


def _apply_model(cfg: RunConfig, value: str) -> RunConfig:
    head, _, rest = value.partition(":")
    head = head.strip().lower()
    if head == "sampled":
        return replace(cfg, model="sampled", sampled_path=rest or cfg.sampled_path)
    if head == "multislit" and rest:
        # multislit:<base>:<N>:<d>
        parts = rest.split(":")
        if len(parts) != 3:
            raise ConfigError("multislit model shorthand is multislit:<base>:<N>:<d>")
        cfg = replace(cfg, model="multislit", base=parts[0].strip().lower())
        cfg = _apply(cfg, "n", parts[1])
        return _apply(cfg, "d", parts[2])
    return replace(cfg, model=head)


def load_config(path=None, overrides: dict | None = None) -> RunConfig:
    """Read a flat ``key = value`` file (an optional ``[slitlab]`` header is allowed)."""
    cfg = RunConfig()
    if path is not None:
        with open(path) as fh:
            text = fh.read()
        parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
        try:
            if not re.search(r"^\s*\[", text, re.M):
                text = "[slitlab]\n" + text
            parser.read_string(text)
        except configparser.Error as exc:
            raise ConfigError(f"cannot parse {path}: {exc}") from exc
        for section in parser.sections():
            for key, value in parser.items(section):
                cfg = _apply(cfg, key, value)
    for key, value in (overrides or {}).items():
        if value is not None:
            cfg = _apply(cfg, key, value)
    return cfg.validate()


def _base_state(cfg: RunConfig, kind: str) -> ApertureState:
    g = cfg.geometry()
    return ApertureState.boxcar(g) if kind == "boxcar" else ApertureState.well(g)


def _model(cfg: RunConfig):
    """Return ``(state_or_multi, amplitude)`` for the configured model."""
    if cfg.model == "sampled":
        state = load_sampled(cfg.sampled_path, hbar=cfg.hbar, mass=cfg.mass,
                             momentum=cfg.incident_momentum)
        return state, numeric_phi(state, [0.0, 1.0])
    if cfg.model == "multislit":
        base = _base_state(cfg, cfg.base)
        spacing = cfg.spacing if cfg.spacing is not None else 3.0 * cfg.width
        try:
            multi = MultiSlitState(base, cfg.slit_count, spacing)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        return multi, compose_momentum_amplitude(multi)
    state = _base_state(cfg, cfg.model)
    return state, analytic_amplitude(state)


def cmd_pattern(cfg: RunConfig) -> str:
    """Intensity columns on the configured momentum grid, as CSV text."""
    p = cfg.grid()
    if cfg.model in ("boxcar", "well"):
        cols = {
            "intensity_boxcar": analytic_amplitude(_base_state(cfg, "boxcar")).intensity(p),
            "intensity_well": analytic_amplitude(_base_state(cfg, "well")).intensity(p),
        }
    elif cfg.model == "sampled":
        _, amp = _model(cfg)
        cols = {"intensity_sampled": amp.intensity(p)}
    else:
        multi, amp = _model(cfg)
        cols = {
            "intensity_multislit": amp.intensity(p),
            "intensity_single": analytic_amplitude(multi.base).intensity(p),
        }
    return pattern_csv(p, cols)


def _zero_note(cfg: RunConfig) -> str:
    g = cfg.geometry()
    limit = float(analytic_amplitude(ApertureState.well(g)).intensity(math.pi * g.momentum_unit))
    return (
        "well pattern: cos(a p/2hbar) vanishes at p = pi*hbar/a, but that point is a removable "
        f"0/0 of the amplitude and the intensity there is finite ({limit:.6g}); the first true "
        "zero is at 3*pi*hbar/a, which is 3/2 of the boxcar's first zero at 2*pi*hbar/a"
    )


_DELTA_P_NOTE = ("classical.delta_p is the half-width p*sin(theta_min) of the central fringe, "
                 "not a standard deviation; compare it with delta_p only in order of magnitude")


def build_report(cfg: RunConfig) -> dict:
    g = cfg.geometry()
    obj, amp = _model(cfg)
    notes = [_zero_note(cfg), _DELTA_P_NOTE]
    tr = transmission_allowed(g)
    if not tr.allowed:
        notes.append("incident energy p^2/2mu is below the slit confinement energy "
                     "(pi*hbar/a)^2/2mu: the particle cannot pass")
    if isinstance(obj, MultiSlitState):
        mean_y, var_y = obj.position_moments()
    else:
        mean_y, var_y = position_moments(obj)
    mm = momentum_moments(amp)
    delta_y = math.sqrt(var_y)
    product = delta_y * mm.delta_p if mm.delta_p is not None else None
    if mm.divergent:
        notes.append(f"<p^2> over [-P, P] does not converge (verdict {mm.scan.verdict.value}, "
                     f"slope {mm.scan.slope:.6g}); delta_p and the product are undefined")
    try:
        lobe = side_lobe_ratio(amp)
    except SlitlabError:
        lobe = None
    try:
        ce = classical_uncertainty_estimate(g)
        classical = {
            "wavelength": g.wavelength,
            "first_minimum_angle": first_minimum_angle(g.wavelength, g.width),
            "delta_y": ce.delta_y,
            "delta_p": ce.delta_p,
            "product": ce.product,
            "product_over_h": ce.product / g.planck,
        }
    except NoMinimumError:
        classical = None
        notes.append("de Broglie wavelength exceeds the slit width: no classical dark fringe")
    unit = g.momentum_unit
    first_zero = first_pattern_minimum(amp)
    return {
        "model": cfg.model,
        "units": {"hbar": g.hbar, "mass": g.mass, "width_a": g.width, "momentum_p": g.momentum},
        "transmission": {
            "allowed": tr.allowed,
            "incident_energy": tr.incident_energy,
            "confinement_energy": tr.confinement_energy,
            "pz": tr.pz,
        },
        "mean_y": mean_y,
        "delta_y": delta_y,
        "delta_y_over_a": delta_y / g.width,
        "mean_p": mm.mean_p,
        "divergent": mm.divergent,
        "verdict": mm.scan.verdict.value,
        "second_moment_p": mm.second_moment_p,
        "delta_p": mm.delta_p,
        "delta_p_over_hbar_per_a": None if mm.delta_p is None else mm.delta_p / unit,
        "slope": mm.scan.slope,
        "scan": {
            "cutoffs": mm.scan.cutoffs,
            "partial_moments": mm.scan.partial_moments,
            "intercept": mm.scan.intercept,
            "relative_residual": mm.scan.residual,
            "extrapolated_limit": mm.scan.limit,
        },
        "product": product,
        "product_over_hbar": None if product is None else product / g.hbar,
        "heisenberg_bound": 0.5 * g.hbar,
        "first_minimum": first_zero,
        "first_minimum_over_hbar_per_a": first_zero / unit,
        "side_lobe_ratio": lobe,
        "classical": classical,
        "notes": notes,
    }


def build_compare(cfg: RunConfig) -> dict:
    g = cfg.geometry()
    box = analytic_amplitude(ApertureState.boxcar(g))
    well_state = ApertureState.well(g)
    well = analytic_amplitude(well_state)
    z_box, z_well = first_pattern_minimum(box), first_pattern_minimum(well)
    lobe_box, lobe_well = side_lobe_ratio(box), side_lobe_ratio(well)
    mm = momentum_moments(well)
    product = math.sqrt(position_moments(well_state)[1]) * mm.delta_p
    h = g.planck
    return {
        "units": {"hbar": g.hbar, "width_a": g.width},
        "first_zero_boxcar": z_box,
        "first_zero_well": z_well,
        "first_zero_ratio": z_well / z_box,
        "well_removable_point": math.pi * g.momentum_unit,
        "side_lobe_ratio_boxcar": lobe_box,
        "side_lobe_ratio_well": lobe_well,
        "well_lobes_suppressed": lobe_well < lobe_box,
        "classical_product": h,
        "classical_product_over_h": 1.0,
        "quantum_product": product,
        "quantum_product_over_hbar": product / g.hbar,
        "quantum_product_over_h": product / h,
        "heisenberg_bound_over_hbar": 0.5,
        "boxcar_product": None,
        "notes": [_zero_note(cfg),
                  "boxcar <p^2> diverges linearly with the cutoff, so its uncertainty "
                  "product is undefined"],
    }


def cmd_report(cfg: RunConfig) -> str:
    return dump_json(build_report(cfg))


def cmd_compare(cfg: RunConfig) -> str:
    return dump_json(build_compare(cfg))


_COMMANDS = {
    "pattern": (cmd_pattern, "pattern_csv"),
    "report": (cmd_report, "report_json"),
    "compare": (cmd_compare, "compare_json"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="slitlab", description="Slit diffraction patterns and uncertainty reports.")
    ap.add_argument("--version", action="version", version=f"slitlab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_ in (("pattern", "write the diffraction intensity as CSV"),
                        ("report", "write the uncertainty analysis as JSON"),
                        ("compare", "compare boxcar and well patterns as JSON")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--config", help="flat key = value run configuration")
        sp.add_argument("--out", help="output path (default: from config, else stdout)")
        sp.add_argument("--model", help="boxcar | well | sampled:<path> | multislit:<base>:<N>:<d>")
        sp.add_argument("--a", help="slit width")
        sp.add_argument("--p", help="incident momentum")
        sp.add_argument("--hbar", help="reduced Planck constant")
        sp.add_argument("--mass", help="particle mass")
        sp.add_argument("--grid", help="momentum grid min:max:points")
    return ap


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:  # --help, --version and usage errors
        return exc.code if isinstance(exc.code, int) else 0
    overrides = {"model": args.model, "a": args.a, "p": args.p, "hbar": args.hbar,
                 "mass": args.mass, "grid": args.grid}
    func, out_key = _COMMANDS[args.command]
    try:
        cfg = load_config(args.config, overrides)
        text = func(cfg)
    except OSError as exc:
        print(f"slitlab: I/O error: {exc}", file=sys.stderr)
        return 2
    except (SlitlabError, ValueError) as exc:
        print(f"slitlab: configuration error: {exc}", file=sys.stderr)
        return 1
    out = args.out or cfg.outputs.get(out_key)
    if out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"slitlab: cannot write {out}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
