"""Quantum Fourier transform."""

import numpy as np

from simcore.circuit import Circuit
from simcore.gates import h, phase, swap
from utils.exceptions import ConfigurationError

MAX_QFT_QUBITS = 12


def qft_circuit(n: int) -> Circuit:
    """QFT on ``n`` qubits including the terminal bit-reversal swaps.

    The circuit matrix is exactly ``F[j, k] = exp(2 pi i j k / 2^n) / 2^(n/2)``
    under the most-significant-first ordering.
    """
    if not 1 <= n <= MAX_QFT_QUBITS:
        raise ConfigurationError(f"QFT size must lie in [1, {MAX_QFT_QUBITS}], got {n}")
    circ = Circuit(n)
    for j in range(n):
        circ.append(h(j))
        for k in range(j + 1, n):
            circ.append(phase(j, 2 * np.pi / 2 ** (k - j + 1), controls=(k,)))
    for i in range(n // 2):
        circ.append(swap(i, n - 1 - i))
    return circ


def dft_matrix(n: int) -> np.ndarray:
    """Analytic unitary DFT matrix on ``n`` qubits."""
    size = 2 ** n
    jk = np.outer(np.arange(size), np.arange(size))
    return np.exp(2j * np.pi * jk / size) / np.sqrt(size)
