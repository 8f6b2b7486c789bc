"""Figure rendering for esdsim CSV output."""

from .render import FigureSpec, RenderedFigure, load_series, main, render

__all__ = ["FigureSpec", "RenderedFigure", "load_series", "main", "render"]
