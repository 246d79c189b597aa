"""Chebyshev states.

For an ``N``-qubit register the (unnormalized) Chebyshev state is::

    |tau(x)> = 2^(-N/2) T_0(x) |0> + 2^(-(N-1)/2) sum_{k>=1} T_k(x) |k>

These states are orthonormal at the Chebyshev nodes. Away from the nodes
their norm ``N(x)`` differs from one and ``tau~(x) = tau(x) / N(x)``.
"""

from dataclasses import dataclass

import numpy as np

from chebmath.grid import chebyshev_nodes
from chebmath.polynomials import (
    ArrayLike,
    chebyshev_derivative_vander,
    chebyshev_vander,
    check_domain,
)
from utils.exceptions import UsageError

# Below this spread T_M(x) ~ 0 near a node cancels in the closed form.
NEAR_POINT_TOLERANCE = 1e-6


def amplitude_weights(N: int) -> np.ndarray:
    """Per-degree scale factors: ``2^(-N/2)`` for k=0, ``2^(-(N-1)/2)`` otherwise."""
    weights = np.full(2 ** N, 2.0 ** (-(N - 1) / 2))
    weights[0] = 2.0 ** (-N / 2)
    return weights


def tau_coefficients(N: int, x: ArrayLike) -> np.ndarray:
    """Amplitudes of ``|tau(x)>``; a trailing axis of length ``2^N`` is added to ``x``."""
    return chebyshev_vander(x, 2 ** N) * amplitude_weights(N)


@dataclass(frozen=True)
class TauState:
    """Unnormalized Chebyshev state at a single point."""
    N: int
    x: float
    coefficients: np.ndarray
    norm: float

    def normalized(self) -> np.ndarray:
        """Amplitudes of ``tau~(x)``."""
        return self.coefficients / self.norm


def tau_norm(N: int, x: ArrayLike) -> ArrayLike:
    """``N(x) = 2^(-(N-1)/2) sqrt(1/2 + sum_{j>=1} T_j(x)^2)``."""
    t = chebyshev_vander(x, 2 ** N)
    values = 2.0 ** (-(N - 1) / 2) * np.sqrt(0.5 + np.sum(t[..., 1:] ** 2, axis=-1))
    return float(values) if np.ndim(values) == 0 else values


def tau_state(N: int, x: float) -> TauState:
    """Chebyshev state ``|tau(x)>`` with its norm."""
    x = float(check_domain(x))
    return TauState(N=N, x=x, coefficients=tau_coefficients(N, x), norm=tau_norm(N, x))


def tau_derivative_coeffs(N: int, x: ArrayLike) -> np.ndarray:
    """Amplitudes of ``|tau'(x)>``: ``T_k'(x)`` scaled like ``|tau(x)>``."""
    return chebyshev_derivative_vander(x, 2 ** N) * amplitude_weights(N)


def orthogonality_sum(N: int, k: int, l: int) -> float:
    """Sum over the ``N``-qubit nodes of ``T_k(x_j) T_l(x_j)``.

    Equals 0 for k != l, 2^N for k = l = 0 and 2^(N-1) for k = l != 0.
    """
    size = 2 ** N
    if not (0 <= k < size and 0 <= l < size):
        raise UsageError(f"Degrees must lie in [0, {size}) for the discrete orthogonality relation")
    t = chebyshev_vander(chebyshev_nodes(N).nodes, size)
    return float(np.dot(t[:, k], t[:, l]))


def overlap_sq_direct(N: int, x_prime: float, x: float) -> float:
    """``|<tau(x')|tau(x)>|^2`` by direct summation."""
    return float(np.dot(tau_coefficients(N, x_prime), tau_coefficients(N, x)) ** 2)


def overlap_sq_formula(N: int, x_prime: float, x: float) -> float:
    """Closed-form squared overlap for ``x'`` on the Chebyshev grid.

    Uses the Christoffel-Darboux kernel::

        (T_{M+1}(x') T_M(x) - T_M(x') T_{M+1}(x))^2 / (2^(2N) (x' - x)^2),  M = 2^N

    The expression is 0/0 at ``x = x'``. Within ``NEAR_POINT_TOLERANCE`` of
    the node the numerator loses its digits to cancellation, so the direct
    sum is returned instead.
    """
    grid = chebyshev_nodes(N)
    if not grid.is_node(x_prime):
        raise UsageError(f"x' = {x_prime} is not a node of the {N}-qubit Chebyshev grid")
    check_domain(x)
    if abs(x - x_prime) < NEAR_POINT_TOLERANCE:
        return overlap_sq_direct(N, x_prime, x)

    m = 2 ** N
    tp = chebyshev_vander(x_prime, m + 2)
    tx = chebyshev_vander(x, m + 2)
    numerator = tp[m + 1] * tx[m] - tp[m] * tx[m + 1]
    return float(numerator ** 2 / (2.0 ** (2 * N) * (x_prime - x) ** 2))
