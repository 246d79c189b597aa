"""Quantum Chebyshev transform: oracle, circuit and register extension."""
