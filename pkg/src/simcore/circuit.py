"""Ordered gate containers."""

from collections import Counter
from typing import Dict, Iterable, Iterator, List, Optional

import numpy as np

from simcore.gates import Gate, GateKind
from simcore.kernels import apply_gate_array
from utils.exceptions import UsageError

MAX_MATRIX_QUBITS = 12


class Circuit:
    """An ordered list of gates on ``n_qubits`` qubits."""

    def __init__(self, n_qubits: int, gates: Optional[Iterable[Gate]] = None):
        if n_qubits < 1:
            raise UsageError(f"Circuit needs at least one qubit, got {n_qubits}")
        self.n_qubits = n_qubits
        self.gates: List[Gate] = []
        if gates is not None:
            self.extend(gates)

    def append(self, gate: Gate) -> "Circuit":
        """Append a gate after checking its qubit indices."""
        if min(gate.qubits) < 0 or gate.max_index() >= self.n_qubits:
            raise UsageError(
                f"Gate {gate.kind.name} on qubits {gate.qubits} is outside a {self.n_qubits}-qubit circuit"
            )
        self.gates.append(gate)
        return self

    def extend(self, gates: Iterable[Gate]) -> "Circuit":
        for gate in gates:
            self.append(gate)
        return self

    def compose(self, other: "Circuit", offset: int = 0) -> "Circuit":
        """Append ``other``'s gates with their qubit indices shifted by ``offset``."""
        for gate in other.gates:
            self.append(Gate(
                gate.kind,
                tuple(t + offset for t in gate.targets),
                tuple(c + offset for c in gate.controls),
                gate.params,
                gate.unitary,
            ))
        return self

    def inverse(self) -> "Circuit":
        """Circuit implementing the adjoint: reversed order, daggered gates."""
        return Circuit(self.n_qubits, [g.dagger() for g in reversed(self.gates)])

    def copy(self) -> "Circuit":
        return Circuit(self.n_qubits, list(self.gates))

    def count_ops(self) -> Dict[str, int]:
        """Gate counts keyed by kind name, with a ``c`` prefix per control (CNOT counts as ``cx``)."""
        return dict(Counter(
            "c" * len(g.controls) + ("x" if g.kind is GateKind.CNOT else g.kind.value) for g in self.gates
        ))

    def apply_to_array(self, amplitudes: np.ndarray) -> np.ndarray:
        """Apply every gate in order to an array of shape ``(2**n, *batch)``."""
        if amplitudes.shape[0] != 2 ** self.n_qubits:
            raise UsageError(
                f"Array with leading dimension {amplitudes.shape[0]} does not match "
                f"a {self.n_qubits}-qubit circuit"
            )
        out = np.asarray(amplitudes, dtype=np.complex128)
        for gate in self.gates:
            out = apply_gate_array(out, gate, self.n_qubits)
        return out

    def matrix(self) -> np.ndarray:
        """Dense unitary of the circuit (column k is the image of basis state k)."""
        if self.n_qubits > MAX_MATRIX_QUBITS:
            raise UsageError(f"Dense matrices are limited to {MAX_MATRIX_QUBITS} qubits")
        return self.apply_to_array(np.eye(2 ** self.n_qubits, dtype=np.complex128))

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def __repr__(self) -> str:
        return f"Circuit(n_qubits={self.n_qubits}, gates={len(self.gates)})"
