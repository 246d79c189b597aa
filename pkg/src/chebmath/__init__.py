"""Analytic Chebyshev machinery."""
