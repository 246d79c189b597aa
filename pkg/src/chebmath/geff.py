"""Effective derivative generator on Chebyshev-state amplitudes.

The derivative of a first-kind polynomial expands in lower degrees::

    T_0'      = 0
    T_{2n}'   = 4n sum_{m=1..n} T_{2m-1}
    T_{2n+1}' = (4n+2) sum_{m=1..n} T_{2m} + (2n+1) T_0

``G`` acts on column vectors of amplitudes, ``G @ tau(x) = tau'(x)``. Row
``k`` lists the contributions to ``T_k'``, so row 0 vanishes and the support
is strictly below the diagonal. The amplitude weights differ between degree 0
and the rest by ``sqrt(2)``, which rescales column 0.
"""

from dataclasses import dataclass

import numpy as np

from chebmath.tau import amplitude_weights
from utils.exceptions import ConfigurationError

MAX_GEFF_QUBITS = 10


@dataclass(frozen=True)
class GEffMatrix:
    """Dense ``2^N x 2^N`` derivative generator."""
    N: int
    entries: np.ndarray

    def apply(self, coefficients: np.ndarray) -> np.ndarray:
        """Apply to amplitude vectors stored along the last axis."""
        return coefficients @ self.entries.T


def derivative_expansion(size: int) -> np.ndarray:
    """``D[k, m]`` with ``T_k' = sum_m D[k, m] T_m`` for ``k < size``."""
    d = np.zeros((size, size))
    for k in range(1, size):
        n, odd = divmod(k, 2)
        if odd:
            d[k, 0] = 2 * n + 1
            for m in range(1, n + 1):
                d[k, 2 * m] = 4 * n + 2
        else:
            for m in range(1, n + 1):
                d[k, 2 * m - 1] = 4 * n
    return d


def g_eff_matrix(N: int) -> GEffMatrix:
    """Generator mapping ``tau(x)`` amplitudes to ``tau'(x)`` amplitudes."""
    if not 1 <= N <= MAX_GEFF_QUBITS:
        raise ConfigurationError(f"G_eff size must lie in [1, {MAX_GEFF_QUBITS}] qubits, got {N}")
    w = amplitude_weights(N)
    entries = derivative_expansion(2 ** N) * w[:, None] / w[None, :]
    entries.setflags(write=False)
    return GEffMatrix(N=N, entries=entries)
