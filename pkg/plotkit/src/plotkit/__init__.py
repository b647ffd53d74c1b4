"""Figure rendering for stokes-spectra experiment bundles."""

from .render import KINDS, PlotSpec, RenderError, build_figure, render

__version__ = "0.1.0"
__all__ = ["KINDS", "PlotSpec", "RenderError", "build_figure", "render"]
