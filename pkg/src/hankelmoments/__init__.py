"""Hankel determinants of linear combinations of moments of orthogonal polynomials."""

__version__ = "0.1.0"
