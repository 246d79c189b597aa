"""Chebyshev node grids."""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import chebyshev as npcheb

from utils.exceptions import ConfigurationError, UsageError

MAX_GRID_QUBITS = 12


@dataclass(frozen=True)
class ChebyshevGrid:
    """Zeros of ``T_{2^N}``: ``nodes[j] = cos(pi (2j + 1) / 2^(N+1))``.

    Nodes decrease strictly with ``j`` and satisfy ``nodes[j] = -nodes[2^N - 1 - j]``.
    """
    n_qubits: int
    nodes: np.ndarray

    def __len__(self) -> int:
        return self.nodes.shape[0]

    def value(self, j: int) -> float:
        """Node value for index ``j``."""
        if not 0 <= j < len(self):
            raise UsageError(f"Node index {j} outside [0, {len(self)})")
        return float(self.nodes[j])

    def index_of(self, x: float, tol: float = 1e-12) -> int:
        """Index of the node equal to ``x`` within ``tol``."""
        j = int(np.argmin(np.abs(self.nodes - x)))
        if abs(self.nodes[j] - x) > tol:
            raise UsageError(f"{x} is not a Chebyshev node of the {self.n_qubits}-qubit grid")
        return j

    def is_node(self, x: float, tol: float = 1e-12) -> bool:
        return bool(np.min(np.abs(self.nodes - x)) <= tol)

    def positive(self) -> np.ndarray:
        """The ``2^(N-1)`` positive nodes, largest first."""
        return self.nodes[: len(self) // 2]


def chebyshev_nodes(N: int) -> ChebyshevGrid:
    """Chebyshev grid for an ``N``-qubit register."""
    if not 1 <= N <= MAX_GRID_QUBITS:
        raise ConfigurationError(f"Grid size must lie in [1, {MAX_GRID_QUBITS}] qubits, got {N}")
    # chebpts1 is increasing and computed with sin, so the reversal is exactly antisymmetric
    nodes = npcheb.chebpts1(2 ** N)[::-1].copy()
    nodes.setflags(write=False)
    return ChebyshevGrid(n_qubits=N, nodes=nodes)
