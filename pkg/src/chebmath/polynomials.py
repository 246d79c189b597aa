"""Chebyshev polynomials of the first kind and their derivatives.

Values come from the three-term recurrence ``T_{k+1} = 2x T_k - T_{k-1}``
(``numpy.polynomial.chebyshev.chebvander``), which stays accurate near
``|x| = 1`` where ``cos(k arccos x)`` loses digits. Derivatives use
``T_k' = k U_{k-1}`` with the second-kind recurrence.
"""

from typing import Union

import numpy as np
from numpy.polynomial import chebyshev as npcheb
from scipy.special import eval_chebyu

from utils.exceptions import DomainError, UsageError

ArrayLike = Union[float, np.ndarray]


def check_domain(x: ArrayLike) -> np.ndarray:
    """Return ``x`` as a float array, raising if any entry has ``|x| > 1``."""
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("Chebyshev argument must be finite")
    if np.any(np.abs(arr) > 1.0):
        raise DomainError(f"Chebyshev argument must satisfy |x| <= 1, got max |x| = {np.max(np.abs(arr))}")
    return arr


def chebyshev_vander(x: ArrayLike, count: int) -> np.ndarray:
    """``T_0(x) .. T_{count-1}(x)`` along the last axis."""
    if count < 1:
        raise UsageError(f"Need at least one polynomial, got count={count}")
    arr = check_domain(x)
    return npcheb.chebvander(arr.reshape(-1), count - 1).reshape(arr.shape + (count,))


def chebyshev_T(k: int, x: ArrayLike) -> ArrayLike:
    """First-kind Chebyshev polynomial ``T_k(x)``."""
    if k < 0:
        raise UsageError(f"Polynomial degree must be non-negative, got {k}")
    values = chebyshev_vander(x, k + 1)[..., k]
    return float(values) if np.ndim(values) == 0 else values


def chebyshev_T_derivative(k: int, x: ArrayLike) -> ArrayLike:
    """``T_k'(x) = k U_{k-1}(x)``; ``T_0' = 0``."""
    if k < 0:
        raise UsageError(f"Polynomial degree must be non-negative, got {k}")
    arr = check_domain(x)
    values = np.zeros_like(arr) if k == 0 else k * eval_chebyu(k - 1, arr)
    return float(values) if np.ndim(values) == 0 else values


def chebyshev_derivative_vander(x: ArrayLike, count: int) -> np.ndarray:
    """``T_0'(x) .. T_{count-1}'(x)`` along the last axis."""
    arr = check_domain(x)
    degrees = np.arange(1, count)
    out = np.zeros(arr.shape + (count,))
    out[..., 1:] = degrees * eval_chebyu(degrees - 1, arr[..., None])
    return out
