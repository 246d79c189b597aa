"""Type-II discrete cosine transform matrix."""

import numpy as np
from scipy.fft import dct

from utils.exceptions import ConfigurationError

MAX_DCT_QUBITS = 10


def dct2_matrix(N: int) -> np.ndarray:
    """Orthonormal DCT-II matrix of size ``2^N``.

    Entry ``[k, j] = 2^(-(N-1)/2) c_k cos(k (j + 1/2) pi / 2^N)`` with
    ``c_0 = 1/sqrt(2)`` and ``c_k = 1`` otherwise, so column ``j`` holds the
    amplitudes of ``|tau(x_j)>``.
    """
    if not 1 <= N <= MAX_DCT_QUBITS:
        raise ConfigurationError(f"DCT size must lie in [1, {MAX_DCT_QUBITS}] qubits, got {N}")
    return dct(np.eye(2 ** N), type=2, norm="ortho", axis=0)
