"""Matrix oracle for the quantum Chebyshev transform."""

from dataclasses import dataclass

import numpy as np

from chebmath.dct import dct2_matrix
from utils.exceptions import ConfigurationError

MAX_ORACLE_QUBITS = 10


@dataclass(frozen=True)
class QChTOracle:
    """Unitary on ``N + 1`` qubits whose ancilla-0 block is the DCT-II matrix.

    The ancilla is qubit 0 (most significant), so the ancilla-0 block is the
    top-left ``2^N x 2^N`` corner.
    """
    N: int
    matrix: np.ndarray

    @property
    def block_size(self) -> int:
        return 2 ** self.N

    def ancilla_zero_block(self) -> np.ndarray:
        m = self.block_size
        return self.matrix[:m, :m]


def unitary_completion(columns: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Extend orthonormal ``columns`` to a full unitary.

    Gram-Schmidt runs over the standard basis vectors in index order, keeping
    each one whose residual norm exceeds ``tol``.
    """
    dim, count = columns.shape
    q = np.zeros((dim, dim), dtype=np.complex128)
    q[:, :count] = columns
    for i in range(dim):
        if count == dim:
            break
        v = np.zeros(dim, dtype=np.complex128)
        v[i] = 1.0
        # two passes keep the new column orthogonal to working precision
        for _ in range(2):
            v -= q[:, :count] @ (q[:, :count].conj().T @ v)
        norm = np.linalg.norm(v)
        if norm > tol:
            q[:, count] = v / norm
            count += 1
    return q


def qcht_oracle(N: int) -> QChTOracle:
    """Reference unitary ``sum_j |0>|tau(x_j)><0|<x_j|`` completed on the ancilla-1 inputs."""
    if not 1 <= N <= MAX_ORACLE_QUBITS:
        raise ConfigurationError(f"Oracle size must lie in [1, {MAX_ORACLE_QUBITS}] qubits, got {N}")
    m = 2 ** N
    first = np.zeros((2 * m, m))
    first[:m, :] = dct2_matrix(N)
    matrix = unitary_completion(first)
    matrix.setflags(write=False)
    return QChTOracle(N=N, matrix=matrix)
