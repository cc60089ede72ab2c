"""Exact computation with finite-dimensional Leibniz algebras over GF(p) and Q."""

__version__ = "0.1.0"
