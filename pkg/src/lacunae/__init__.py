"""Arithmetic independence checks, exact trigonometric-polynomial norms and
Sidon-constant estimates for lacunary integer spectra."""

__version__ = "0.1.0"
