"""Exact-arithmetic toolkit for GSp(4) adjoint L-value constants, K-type
projections, lattice discriminants and modular-form congruences."""

__version__ = "0.1.0"
