"""Gate definitions for the statevector simulator.

Rotation conventions::

    RX(t) = [[cos t/2, -i sin t/2], [-i sin t/2, cos t/2]]
    RY(t) = [[cos t/2,   -sin t/2], [   sin t/2, cos t/2]]
    RZ(t) = diag(exp(-i t/2), exp(i t/2))
    P(p)  = diag(1, exp(i p))

The scaled phase gate ``PTILDE`` carries ``(s, l, x, n_sys)`` and acts as
``diag(1, exp(i s 2^n_sys arccos(x) / l))`` with the principal branch of
arccos.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np

from utils.exceptions import DomainError, UsageError

UNITARY_TOLERANCE = 1e-12


class GateKind(Enum):
    """Supported gate kinds."""
    H = "h"
    X = "x"
    P = "p"
    PTILDE = "ptilde"
    RX = "rx"
    RY = "ry"
    RZ = "rz"
    CNOT = "cnot"
    SWAP = "swap"
    MATRIX = "matrix"


_FIXED_MATRICES = {
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2),
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=np.complex128),
    GateKind.CNOT: np.array([[0, 1], [1, 0]], dtype=np.complex128),
}

_N_PARAMS = {
    GateKind.H: 0,
    GateKind.X: 0,
    GateKind.CNOT: 0,
    GateKind.SWAP: 0,
    GateKind.MATRIX: 0,
    GateKind.P: 1,
    GateKind.RX: 1,
    GateKind.RY: 1,
    GateKind.RZ: 1,
    GateKind.PTILDE: 4,
}

# Kinds whose parameter is an angle with generator sigma/2 (two-point shift rule applies)
SHIFTABLE_KINDS = frozenset({GateKind.RX, GateKind.RY, GateKind.RZ})


def _rotation(kind: GateKind, theta: float) -> np.ndarray:
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    if kind is GateKind.RX:
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)
    if kind is GateKind.RY:
        return np.array([[c, -s], [s, c]], dtype=np.complex128)
    return np.array([[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]], dtype=np.complex128)


def _phase(phi: float) -> np.ndarray:
    return np.array([[1, 0], [0, np.exp(1j * phi)]], dtype=np.complex128)


def scaled_phase_angle(s: float, l: float, x: float, n_sys: int) -> float:
    """Phase angle ``s 2^n_sys arccos(x) / l`` of the scaled phase gate."""
    if abs(x) > 1.0:
        raise DomainError(f"arccos argument must satisfy |x| <= 1, got {x}")
    return s * (2 ** n_sys) * float(np.arccos(x)) / l


@dataclass(frozen=True)
class Gate:
    """A (possibly multi-controlled) gate.

    ``targets`` holds one qubit for every kind except ``SWAP`` (two). Controls
    trigger on ``|1>``; an empty tuple means the gate is unconditional.
    """
    kind: GateKind
    targets: Tuple[int, ...]
    controls: Tuple[int, ...] = ()
    params: Tuple[float, ...] = ()
    unitary: Optional[np.ndarray] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(int(t) for t in self.targets))
        object.__setattr__(self, "controls", tuple(int(c) for c in self.controls))
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))

        n_targets = 2 if self.kind is GateKind.SWAP else 1
        if len(self.targets) != n_targets:
            raise UsageError(f"{self.kind.name} expects {n_targets} target(s), got {self.targets}")
        if len(set(self.targets)) != len(self.targets) or len(set(self.controls)) != len(self.controls):
            raise UsageError(f"Repeated qubit index in {self}")
        if set(self.targets) & set(self.controls):
            raise UsageError(f"Control and target sets overlap: {self.controls} / {self.targets}")
        if self.kind is GateKind.CNOT and len(self.controls) == 0:
            raise UsageError("CNOT requires at least one control")
        if len(self.params) != _N_PARAMS[self.kind]:
            raise UsageError(f"{self.kind.name} expects {_N_PARAMS[self.kind]} parameter(s)")

        if self.kind is GateKind.MATRIX:
            if self.unitary is None:
                raise UsageError("MATRIX gate requires a 2x2 unitary")
            m = np.asarray(self.unitary, dtype=np.complex128)
            if m.shape != (2, 2):
                raise UsageError(f"MATRIX gate expects a 2x2 matrix, got shape {m.shape}")
            if not np.allclose(m.conj().T @ m, np.eye(2), atol=UNITARY_TOLERANCE, rtol=0):
                raise UsageError("MATRIX gate is not unitary within tolerance")
            m.setflags(write=False)
            object.__setattr__(self, "unitary", m)
        elif self.kind is GateKind.PTILDE:
            s, l, x, n_sys = self.params
            if abs(x) > 1.0:
                raise DomainError(f"Scaled phase gate needs |x| <= 1, got {x}")

    @property
    def qubits(self) -> Tuple[int, ...]:
        """All qubits the gate touches."""
        return self.controls + self.targets

    @property
    def is_shiftable(self) -> bool:
        return self.kind in SHIFTABLE_KINDS

    def matrix(self) -> np.ndarray:
        """Single-qubit matrix acting on the target (SWAP has no 2x2 form)."""
        if self.kind in _FIXED_MATRICES:
            return _FIXED_MATRICES[self.kind]
        if self.kind in SHIFTABLE_KINDS:
            return _rotation(self.kind, self.params[0])
        if self.kind is GateKind.P:
            return _phase(self.params[0])
        if self.kind is GateKind.PTILDE:
            return _phase(scaled_phase_angle(*self.params[:3], int(self.params[3])))
        if self.kind is GateKind.MATRIX:
            return self.unitary
        raise UsageError(f"{self.kind.name} has no single-qubit matrix")

    def dagger(self) -> "Gate":
        """Inverse gate."""
        if self.kind in (GateKind.H, GateKind.X, GateKind.CNOT, GateKind.SWAP):
            return self
        if self.kind in SHIFTABLE_KINDS or self.kind is GateKind.P:
            return Gate(self.kind, self.targets, self.controls, (-self.params[0],))
        return Gate(GateKind.MATRIX, self.targets, self.controls, unitary=self.matrix().conj().T)

    def with_angle(self, angle: float) -> "Gate":
        """Copy of a single-angle gate with a new angle."""
        if _N_PARAMS[self.kind] != 1:
            raise UsageError(f"{self.kind.name} has no single angle")
        return Gate(self.kind, self.targets, self.controls, (angle,))

    def max_index(self) -> int:
        return max(self.qubits)


# Convenience constructors

def h(q: int) -> Gate:
    return Gate(GateKind.H, (q,))


def x(q: int, controls: Sequence[int] = ()) -> Gate:
    return Gate(GateKind.X, (q,), tuple(controls))


def cnot(control: int, target: int) -> Gate:
    return Gate(GateKind.CNOT, (target,), (control,))


def phase(q: int, phi: float, controls: Sequence[int] = ()) -> Gate:
    return Gate(GateKind.P, (q,), tuple(controls), (phi,))


def scaled_phase(q: int, s: float, l: float, xval: float, n_sys: int,
                 controls: Sequence[int] = ()) -> Gate:
    return Gate(GateKind.PTILDE, (q,), tuple(controls), (s, l, xval, n_sys))


def rx(q: int, theta: float, controls: Sequence[int] = ()) -> Gate:
    return Gate(GateKind.RX, (q,), tuple(controls), (theta,))


def ry(q: int, theta: float, controls: Sequence[int] = ()) -> Gate:
    return Gate(GateKind.RY, (q,), tuple(controls), (theta,))


def rz(q: int, theta: float, controls: Sequence[int] = ()) -> Gate:
    return Gate(GateKind.RZ, (q,), tuple(controls), (theta,))


def swap(a: int, b: int, controls: Sequence[int] = ()) -> Gate:
    return Gate(GateKind.SWAP, (a, b), tuple(controls))


def unitary(q: int, matrix: np.ndarray, controls: Sequence[int] = ()) -> Gate:
    return Gate(GateKind.MATRIX, (q,), tuple(controls), unitary=np.asarray(matrix))
