"""Scatter plots over the sweep's derived-column CSV files.

This package only draws; every number it plots was computed upstream
and read verbatim from CSV.
"""

from .render import FIGURES, MissingColumn, PlotSpec, render, render_all

__all__ = ["FIGURES", "MissingColumn", "PlotSpec", "render", "render_all"]
