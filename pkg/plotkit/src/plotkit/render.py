"""Render figure-style images from experiment run bundles.

A run bundle is a directory of CSV/JSON files produced by the
``stokes-spectra`` harness.  Five figure kinds are supported:

=================  ==============================  ===========================
kind               input files                     output
=================  ==============================  ===========================
isola              isola.csv [+ qnewton.csv]       asymptotic curve + circles
sheet              sheet.csv                       3D surface over amplitude
lemniscate         lemniscate.csv [+ ffh.csv]      figure-eight + circles
error-scaling      error_scaling.csv               log-log plot + cubic guide
growth-comparison  growth.csv                      growth-rate bar chart
=================  ==============================  ===========================

Rendering is read-only with respect to the bundle.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

KINDS = ("isola", "sheet", "lemniscate", "error-scaling", "growth-comparison")


class RenderError(Exception):
    """Missing or malformed bundle input."""


@dataclass(frozen=True)
class PlotSpec:
    run_dir: Path
    kind: str
    out_path: Path
    title: str | None = None
    xlim: tuple | None = None
    ylim: tuple | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise RenderError(f"unknown figure kind {self.kind!r}; choose from {KINDS}")


def _read_csv(path: Path) -> dict[str, np.ndarray]:
    if not path.exists():
        raise RenderError(f"missing input file: {path}")
    with open(path) as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise RenderError(f"empty input file: {path}") from None
        rows = list(reader)
    if not rows:
        raise RenderError(f"no data rows in {path}")
    cols = {}
    for i, name in enumerate(header):
        vals = [r[i] for r in rows]
        try:
            cols[name] = np.array([float(v) for v in vals])
        except ValueError:
            cols[name] = np.array(vals)
    return cols


def _maybe_summary(run_dir: Path) -> dict:
    p = run_dir / "summary.json"
    if p.exists():
        return json.loads(p.read_text())
    return {}


def _plot_isola(spec: PlotSpec, ax):
    iso = _read_csv(spec.run_dir / "isola.csv")
    order = np.argsort(iso["theta"])
    re = np.append(iso["re_lambda"][order], iso["re_lambda"][order][0])
    im = np.append(iso["im_lambda"][order], iso["im_lambda"][order][0])
    ax.plot(re, im, "-", lw=1.5, label="asymptotic")
    qn = spec.run_dir / "qnewton.csv"
    if qn.exists():
        pts = _read_csv(qn)
        ax.scatter(pts["re_lambda"], pts["im_lambda"], s=28,
                   facecolors="none", edgecolors="tab:red", label="quasi-Newton")
        ax.legend(loc="best", fontsize=8)
    ax.set_xlabel(r"Re $\lambda$")
    ax.set_ylabel(r"Im $\lambda$")


def _plot_sheet(spec: PlotSpec, fig):
    data = _read_csv(spec.run_dir / "sheet.csv")
    ax = fig.add_subplot(projection="3d")
    eps_vals = np.unique(data["epsilon"])
    rows_re, rows_im, rows_eps = [], [], []
    for e in eps_vals:
        sel = data["epsilon"] == e
        order = np.argsort(data["theta"][sel])
        re = data["re_lambda"][sel][order]
        im = data["im_lambda"][sel][order]
        rows_re.append(np.append(re, re[0]))
        rows_im.append(np.append(im, im[0]))
        rows_eps.append(np.full(len(re) + 1, e))
    X, Y, Z = map(np.array, (rows_re, rows_im, rows_eps))
    ax.plot_surface(X, Y, Z, alpha=0.7, cmap="viridis", linewidth=0.2)
    ax.set_xlabel(r"Re $\lambda$")
    ax.set_ylabel(r"Im $\lambda$")
    ax.set_zlabel(r"$\varepsilon$")
    return ax


def _plot_lemniscate(spec: PlotSpec, ax):
    lem = _read_csv(spec.run_dir / "lemniscate.csv")
    for branch in np.unique(lem["branch"]):
        sel = lem["branch"] == branch
        order = np.argsort(lem["theta"][sel])
        ax.plot(lem["re_lambda"][sel][order], lem["im_lambda"][sel][order],
                "k-", lw=1.2)
    ffh = spec.run_dir / "ffh.csv"
    if ffh.exists():
        pts = _read_csv(ffh)
        ax.scatter(pts["re_lambda"], pts["im_lambda"], s=22,
                   facecolors="none", edgecolors="tab:blue", label="Fourier-Hill")
        ax.legend(loc="best", fontsize=8)
    ax.set_xlabel(r"Re $\lambda$")
    ax.set_ylabel(r"Im $\lambda$")


def _plot_error_scaling(spec: PlotSpec, ax):
    err = _read_csv(spec.run_dir / "error_scaling.csv")
    eps, e = err["epsilon"], err["error"]
    ax.loglog(eps, e, "*-", label="measured")
    summary = _maybe_summary(spec.run_dir)
    pref = summary.get("prefactor")
    if pref is None:
        pref = float(np.exp(np.mean(np.log(e) - 3.0 * np.log(eps))))
    guide = np.array([eps.min(), eps.max()])
    ax.loglog(guide, pref * guide**3, "-", color="0.4",
              label=rf"$y = {pref:.3g}\,\varepsilon^3$")
    ax.set_xlabel(r"$\varepsilon$")
    ax.set_ylabel("eigenvalue error")
    ax.legend(loc="best", fontsize=8)


def _plot_growth(spec: PlotSpec, ax):
    rows = _read_csv(spec.run_dir / "growth.csv")
    labels = [f"{m} (p0={p:.3f})" if m != "benjamin-feir" else m
              for m, p in zip(rows["mechanism"], rows["p0"])]
    amps = rows["amplitude"]
    ax.bar(range(len(amps)), amps, color="tab:purple")
    ax.set_xticks(range(len(amps)))
    ax.set_xticklabels(labels, rotation=30, ha="right", fontsize=7)
    ax.set_ylabel("growth-rate coefficient")
    if np.all(amps > 0):
        ax.set_yscale("log")


def build_figure(spec: PlotSpec):
    """Create and return the matplotlib Figure for a spec (no file output)."""
    fig = plt.figure(figsize=(6.0, 4.5), dpi=150)
    if spec.kind == "sheet":
        ax = _plot_sheet(spec, fig)
    else:
        ax = fig.add_subplot()
        {"isola": _plot_isola,
         "lemniscate": _plot_lemniscate,
         "error-scaling": _plot_error_scaling,
         "growth-comparison": _plot_growth}[spec.kind](spec, ax)
    if spec.title:
        ax.set_title(spec.title)
    if spec.xlim:
        ax.set_xlim(*spec.xlim)
    if spec.ylim:
        ax.set_ylim(*spec.ylim)
    fig.tight_layout()
    return fig


def render(spec: PlotSpec) -> Path:
    """Render a bundle to an image file; returns the output path."""
    fig = build_figure(spec)
    spec.out_path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(spec.out_path)
    plt.close(fig)
    if not spec.out_path.exists() or spec.out_path.stat().st_size == 0:
        raise RenderError(f"failed to write {spec.out_path}")
    return spec.out_path
