"""Symplectic leaves, Poisson brackets, and spectral factorization of monic matrix polynomials."""

__version__ = "0.1.0"
