"""Named, reproducible experiment runs with machine-readable outputs.

Each registry entry reproduces one validation study: an asymptotic isola
overlaid with individually continued eigenvalues, a sheet of spectral data,
a log-log error-scaling run, a modulational figure-eight against the swept
numerical spectrum, or a growth-rate comparison table.

A run writes into its output directory:

* ``config.json``  -- echo of the resolved configuration;
* one or more CSV files with fixed headers (see the ``_write_csv`` calls);
* ``summary.json`` -- key metrics and pass/fail flags.

Everything is deterministic: no randomness is used anywhere and eigenvalue
lists are canonically ordered, so identical configs give identical files.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import hill
from .benjamin_feir import (
    am_lemniscate,
    bf_constants,
    compare_growth,
    lemniscate_curve,
)
from .dispersion import DispersionModel, parse_model
from .exceptions import ConfigError, InvalidDataError
from .flatspec import Collision, find_collisions
from .highfreq import isola_for
from .newton_eig import continue_in_epsilon, isola_points
from .stokes import stokes_expand


@dataclass(frozen=True)
class ExperimentConfig:
    """Fully resolved parameters of one named run."""

    name: str
    kind: str                     # isola | sheet | scaling | bf | am | growth
    model: str                    # model specification string
    m: int = 0                    # resonance order of the target collision
    p0: float = 0.0               # approximate Floquet exponent selector
    epsilon: float = 1e-3         # amplitude for single-amplitude outputs
    epsilons: tuple = ()          # amplitude list for scaling outputs
    n_theta: int = 64
    n_modes: int = 32
    out_dir: str = "."

    def resolve_model(self) -> DispersionModel:
        return parse_model(self.model)


REGISTRY: dict[str, ExperimentConfig] = {}


def _register(cfg: ExperimentConfig):
    REGISTRY[cfg.name] = cfg
    return cfg


_register(ExperimentConfig(
    name="fig1-left", kind="isola", model="capillarywhitham:h=inf,sigma=2.5",
    m=1, p0=0.2681, epsilon=1e-3, n_theta=64, n_modes=24))
_register(ExperimentConfig(
    name="fig1-right", kind="isola", model="akersmilewski:sigma=2",
    m=1, p0=0.1464, epsilon=1e-3, n_theta=64, n_modes=24))
_register(ExperimentConfig(
    name="fig2", kind="sheet", model="capillarywhitham:h=inf,sigma=2.5",
    m=1, p0=0.2681, epsilons=(2e-4, 5e-4, 1e-3, 1.5e-3, 2e-3), n_theta=64))
_register(ExperimentConfig(
    name="fig3", kind="sheet", model="kawahara:a=1,b=-0.25",
    m=2, p0=0.3675, epsilons=(2e-4, 5e-4, 1e-3, 1.5e-3, 2e-3), n_theta=64))
# scaling amplitude lists live inside each model's cubic-error regime: the
# worst-over-theta mismatch follows ~6 eps^3 (Kawahara) and ~1e3 eps^3
# (capillary-Whitham) only there, collapsing to quartic behavior below it
_register(ExperimentConfig(
    name="fig4", kind="scaling", model="kawahara:a=1,b=-0.25",
    m=2, p0=0.3675, epsilon=1e-3,
    epsilons=(1e-3, 1.778e-3, 3.162e-3, 5.623e-3, 1e-2), n_theta=64, n_modes=32))
_register(ExperimentConfig(
    name="fig5", kind="scaling", model="capillarywhitham:h=inf,sigma=0.25",
    m=2, p0=0.1363, epsilon=1e-4,
    epsilons=(1e-4, 1.5e-4, 2.25e-4, 3.375e-4, 5e-4), n_theta=64, n_modes=32))
_register(ExperimentConfig(
    name="fig6-left", kind="bf", model="kawahara:a=-3,b=1", epsilon=1e-2, n_modes=24))
_register(ExperimentConfig(
    name="fig6-center", kind="bf", model="whitham:h=2", epsilon=1e-2, n_modes=24))
_register(ExperimentConfig(
    name="fig6-right", kind="bf", model="capillarywhitham:h=2,sigma=3",
    epsilon=1e-2, n_modes=24))
_register(ExperimentConfig(
    name="fig7", kind="am", model="akersmilewski:sigma=1", epsilon=1e-2,
    epsilons=(4e-3, 1e-2, 2e-2), n_modes=24))
_register(ExperimentConfig(
    name="compare-growth", kind="growth",
    model="capillarywhitham:h=inf,sigma=0.25"))

ALIASES = {"fig6": "fig6-left", "fig1": "fig1-left"}


def fit_power_law(pairs):
    """Least-squares power law through (x, y) pairs: returns (slope, prefactor).

    Fits a straight line to (log x, log y); the prefactor is exp(intercept),
    so the fitted model is y = prefactor * x**slope.

    Raises
    ------
    InvalidDataError
        For fewer than 4 points or any nonpositive value.
    """
    pairs = list(pairs)
    if len(pairs) < 4:
        raise InvalidDataError("power-law fit needs at least 4 points")
    xs = np.array([p[0] for p in pairs], dtype=float)
    ys = np.array([p[1] for p in pairs], dtype=float)
    if np.any(xs <= 0) or np.any(ys <= 0):
        raise InvalidDataError("power-law fit needs positive data")
    slope, intercept = np.polyfit(np.log(xs), np.log(ys), 1)
    return float(slope), float(math.exp(intercept))


def hausdorff_distance(a, b) -> float:
    """Symmetric Hausdorff distance between two finite complex point sets."""
    a = np.asarray(a, dtype=complex).ravel()
    b = np.asarray(b, dtype=complex).ravel()
    d = np.abs(a[:, None] - b[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def select_collision(model: DispersionModel, m: int, p0_near: float,
                     k_range=(-20, 20)) -> Collision:
    cols = find_collisions(model, m, k_range)
    if not cols:
        raise ConfigError(f"no order-{m} collisions found for {model}")
    return min(cols, key=lambda c: abs(c.p0 - p0_near))


# ----------------------------------------------------------------------------
# output helpers
# ----------------------------------------------------------------------------

def _write_csv(path: Path, header, rows):
    with open(path, "w") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(f"{x:.12e}" if isinstance(x, float) else str(x)
                              for x in row) + "\n")


def _dump_json(path: Path, obj):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


# ----------------------------------------------------------------------------
# experiment bodies
# ----------------------------------------------------------------------------

def _run_isola(cfg: ExperimentConfig, out: Path, jobs: int) -> dict:
    model = cfg.resolve_model()
    coll = select_collision(model, cfg.m, cfg.p0)
    iso = isola_for(model, coll)
    eps = cfg.epsilon
    theta, lam, p = iso.sample(eps, cfg.n_theta)
    _write_csv(out / "isola.csv", ["theta", "re_lambda", "im_lambda", "p"],
               [(float(t), float(l.real), float(l.imag), float(pp))
                for t, l, pp in zip(theta, lam, p)])
    pairs = isola_points(model, coll, eps, theta, N=cfg.n_modes, isola=iso)
    _write_csv(out / "qnewton.csv",
               ["epsilon", "theta", "p", "re_lambda", "im_lambda", "residual", "iters"],
               [(eps, float(t), pr.p, pr.lam.real, pr.lam.imag, pr.residual, pr.iters)
                for t, pr in zip(theta, pairs)])
    qn = np.array([pr.lam for pr in pairs])
    h = hausdorff_distance(lam, qn)
    max_asym = iso.max_growth_rate(eps)
    max_num = float(qn.real.max())
    return {
        "collision": {"k1": coll.k1, "k2": coll.k2, "p0": coll.p0,
                      "im_lambda0": coll.lambda0.imag},
        "hausdorff": h,
        "hausdorff_over_eps2": h / eps**2,
        "max_re_asymptotic": max_asym,
        "max_re_numeric": max_num,
        "growth_rel_err": abs(max_asym - max_num) / max_num,
    }


def _run_sheet(cfg: ExperimentConfig, out: Path, jobs: int) -> dict:
    model = cfg.resolve_model()
    coll = select_collision(model, cfg.m, cfg.p0)
    iso = isola_for(model, coll)
    rows = []
    for eps in cfg.epsilons:
        theta, lam, p = iso.sample(eps, cfg.n_theta)
        rows.extend((eps, float(t), float(l.real), float(l.imag), float(pp))
                    for t, l, pp in zip(theta, lam, p))
    _write_csv(out / "sheet.csv",
               ["epsilon", "theta", "re_lambda", "im_lambda", "p"], rows)
    return {"collision": {"k1": coll.k1, "k2": coll.k2, "p0": coll.p0},
            "n_amplitudes": len(cfg.epsilons), "n_theta": cfg.n_theta}


def _run_scaling(cfg: ExperimentConfig, out: Path, jobs: int) -> dict:
    model = cfg.resolve_model()
    coll = select_collision(model, cfg.m, cfg.p0)
    iso = isola_for(model, coll)

    # asymptotic isola + continued eigenvalues at the reference amplitude
    summary = _run_isola(cfg, out, jobs)

    # worst-over-theta mismatch between continued eigenvalues and asymptotics
    thetas = np.linspace(0.0, 2.0 * np.pi, 16, endpoint=False)
    eps_list = sorted(cfg.epsilons)
    errors = np.zeros(len(eps_list))
    for th in thetas:
        pairs = continue_in_epsilon(model, coll, float(th), eps_list,
                                    N=cfg.n_modes, isola=iso)
        for i, (e, pr) in enumerate(zip(eps_list, pairs)):
            errors[i] = max(errors[i], abs(pr.lam - iso.lambda_at(float(th), e)))
    _write_csv(out / "error_scaling.csv", ["epsilon", "error"],
               list(zip(map(float, eps_list), map(float, errors))))
    slope, prefactor = fit_power_law(list(zip(eps_list, errors)))
    summary.update({"slope": slope, "prefactor": prefactor,
                    "epsilons": list(map(float, eps_list)),
                    "errors": list(map(float, errors))})
    return summary


def _bf_sweep(model, lm, eps, n_modes, n_p=80):
    """Unstable eigenvalues near the origin over the predicted Floquet window."""
    wave = stokes_expand(model, eps, 2)
    pmax = 1.05 * eps * lm.p1_max
    radius = 3.0 * eps * (abs(lm.cg1) * lm.p1_max + 1.0)
    pts = []
    for p in np.linspace(pmax / n_p, pmax, n_p):
        sl = hill.spectrum_slice(model, wave, float(p), n_modes)
        for lam in sl.unstable():
            if abs(lam) < radius:
                pts.append((float(p), complex(lam)))
    return pts


def _run_bf(cfg: ExperimentConfig, out: Path, jobs: int) -> dict:
    model = cfg.resolve_model()
    lm = bf_constants(model)
    eps = cfg.epsilon
    theta, branch, lam, p = lemniscate_curve(lm, eps, 512)
    _write_csv(out / "lemniscate.csv",
               ["theta", "branch", "re_lambda", "im_lambda", "p"],
               [(float(t), int(b), float(l.real), float(l.imag), float(pp))
                for t, b, l, pp in zip(theta, branch, lam, p)])
    pts = _bf_sweep(model, lm, eps, cfg.n_modes)
    rows = [(pp, l.real, l.imag) for pp, l in pts]
    rows += [(-pp, l.real, -l.imag) for pp, l in pts]   # conjugate slices at -p
    _write_csv(out / "ffh.csv", ["p", "re_lambda", "im_lambda"], rows)
    _dump_json(out / "constants.json", lm.to_dict())

    _, _, dense, _ = lemniscate_curve(lm, eps, 100_001)
    worst = max((float(np.min(np.abs(dense - l))) for _, l in pts), default=0.0)
    max_re = max((l.real for _, l in pts), default=0.0)
    pred = lm.max_growth_rate(eps)
    return {
        "constants": lm.to_dict(),
        "max_re_ffh": max_re,
        "max_re_predicted": pred,
        "growth_rel_err": abs(max_re - pred) / pred,
        "worst_distance": worst,
        "distance_bound_20eps3": 20.0 * eps**3,
    }


def _am_extents(model, lm, eps, n_modes):
    pts = _bf_sweep(model, lm, eps, n_modes)
    if not pts:
        return 0.0, 0.0
    lams = np.array([l for _, l in pts])
    return float(lams.real.max()), float(np.abs(lams.imag).max())


def _run_am(cfg: ExperimentConfig, out: Path, jobs: int) -> dict:
    model = cfg.resolve_model()
    lm = bf_constants(model)
    eps = cfg.epsilon
    curve = am_lemniscate(model, eps, n_modes=cfg.n_modes)
    _write_csv(out / "lemniscate.csv",
               ["theta", "branch", "re_lambda", "im_lambda", "p"],
               [(float(t), int(b), float(l.real), float(l.imag), float(pp))
                for t, b, l, pp in zip(curve.theta, curve.branch, curve.lam, curve.p)])
    pts = _bf_sweep(model, lm, eps, cfg.n_modes)
    rows = [(pp, l.real, l.imag) for pp, l in pts]
    rows += [(-pp, l.real, -l.imag) for pp, l in pts]
    _write_csv(out / "ffh.csv", ["p", "re_lambda", "im_lambda"], rows)

    extents = [(e, *_am_extents(model, lm, e, cfg.n_modes)) for e in cfg.epsilons]
    _write_csv(out / "scaling.csv", ["epsilon", "re_extent", "im_extent"], extents)

    def _loglog_slope(pts):
        xs, ys = np.log([p[0] for p in pts]), np.log([p[1] for p in pts])
        return float(np.polyfit(xs, ys, 1)[0])

    re_slope = _loglog_slope([(e, r) for e, r, _ in extents])
    im_slope = _loglog_slope([(e, i) for e, _, i in extents])
    re_at_eps = next(r for e, r, _ in extents if e == eps)
    pred = lm.max_growth_rate(eps)
    return {
        "constants": lm.to_dict(),
        "re_extent": re_at_eps,
        "re_predicted": pred,
        "re_rel_err": abs(re_at_eps - pred) / pred,
        "re_exponent": re_slope,
        "im_exponent": im_slope,
        "im_cubic_coeff": curve.im_cubic,
    }


def _run_growth(cfg: ExperimentConfig, out: Path, jobs: int) -> dict:
    model = cfg.resolve_model()
    report = compare_growth(model)
    _write_csv(out / "growth.csv",
               ["mechanism", "m", "p0", "order", "amplitude"],
               [(mech, m, float(p0), order, float(amp))
                for mech, m, p0, order, amp in report.rows()])
    return {
        "verdict": report.verdict,
        "n_unstable_triads": len(report.triads),
        "n_unstable_quartets": len(report.quartets),
        "bf_amp": report.bf_amp,
        "max_quartet_amp": max((a for _, a in report.quartets), default=None),
    }


_BODIES = {
    "isola": _run_isola,
    "sheet": _run_sheet,
    "scaling": _run_scaling,
    "bf": _run_bf,
    "am": _run_am,
    "growth": _run_growth,
}


def run(name_or_config, out_dir, jobs: int = 1, model: str | None = None) -> dict:
    """Execute one experiment and write its bundle into ``out_dir``.

    ``name_or_config`` is a registry name (see :data:`REGISTRY`) or a full
    :class:`ExperimentConfig`.  ``model`` overrides the configured model
    specification string.  Returns the summary dict (also written to
    ``summary.json``).
    """
    if isinstance(name_or_config, ExperimentConfig):
        cfg = name_or_config
    else:
        key = ALIASES.get(str(name_or_config), str(name_or_config))
        if key not in REGISTRY:
            raise ConfigError(
                f"unknown experiment {name_or_config!r}; known: {sorted(REGISTRY)}")
        cfg = REGISTRY[key]
    if model is not None:
        cfg = ExperimentConfig(**{**asdict(cfg), "model": model})
    cfg.resolve_model()   # fail fast on a bad model string

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    _dump_json(out / "config.json", asdict(cfg))
    t0 = time.perf_counter()
    summary = _BODIES[cfg.kind](cfg, out, jobs)
    summary["experiment"] = cfg.name
    summary["runtime_s"] = round(time.perf_counter() - t0, 3)
    _dump_json(out / "summary.json", summary)
    return summary
