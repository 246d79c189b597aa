"""Hardware-efficient variational ansatz.

Each layer applies ``RY`` then ``RZ`` to every qubit, followed by a CNOT
chain ``0 -> 1 -> ... -> N-1``. An optional closing layer of rotations has
no entangler. Parameter ``layer * (2 N) + 2 q + r`` drives rotation ``r``
(0 = RY, 1 = RZ) on qubit ``q`` in ``layer``, the closing layer being
``layer = depth``.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from simcore.circuit import Circuit
from simcore.gates import cnot, rx, ry, rz
from utils.exceptions import UsageError

_ROTATION_BUILDERS = {"rx": rx, "ry": ry, "rz": rz}


class AnsatzSpec(BaseModel):
    """Topology of the variational circuit."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    N: int = Field(ge=1)
    depth: int = Field(ge=1)
    rotations: Tuple[str, ...] = ("ry", "rz")
    entangler: str = "linear"
    final_rotations: bool = True

    @field_validator("rotations")
    @classmethod
    def _known_axes(cls, value):
        if not value or any(r not in _ROTATION_BUILDERS for r in value):
            raise ValueError(f"unsupported rotation axes {value}")
        return value

    @field_validator("entangler")
    @classmethod
    def _known_entangler(cls, value):
        if value != "linear":
            raise ValueError(f"unsupported entangler pattern '{value}'")
        return value

    @property
    def rotations_per_layer(self) -> int:
        return len(self.rotations)

    @property
    def rotation_layers(self) -> int:
        return self.depth + int(self.final_rotations)

    @property
    def n_params(self) -> int:
        return self.N * self.rotation_layers * self.rotations_per_layer

    def parameter_index(self, layer: int, qubit: int, rotation: int) -> int:
        return (layer * self.N + qubit) * self.rotations_per_layer + rotation


@dataclass(frozen=True)
class ModelParams:
    """Variational angles together with the ansatz they drive."""
    theta: np.ndarray
    ansatz: AnsatzSpec

    def __post_init__(self):
        theta = np.asarray(self.theta, dtype=float).reshape(-1)
        if theta.shape[0] != self.ansatz.n_params:
            raise UsageError(
                f"Ansatz expects {self.ansatz.n_params} parameters, got {theta.shape[0]}"
            )
        if not np.all(np.isfinite(theta)):
            raise UsageError("Parameters must be finite")
        object.__setattr__(self, "theta", theta)

    @property
    def N(self) -> int:
        return self.ansatz.N

    def with_theta(self, theta: np.ndarray) -> "ModelParams":
        return ModelParams(theta=theta, ansatz=self.ansatz)

    @classmethod
    def zeros(cls, ansatz: AnsatzSpec) -> "ModelParams":
        return cls(theta=np.zeros(ansatz.n_params), ansatz=ansatz)


def hea_circuit(params: ModelParams) -> Circuit:
    """Variational circuit ``V(theta)``; rotations appear in parameter order."""
    spec = params.ansatz
    theta = params.theta
    circ = Circuit(spec.N)
    for layer in range(spec.rotation_layers):
        for q in range(spec.N):
            for r, axis in enumerate(spec.rotations):
                circ.append(_ROTATION_BUILDERS[axis](q, theta[spec.parameter_index(layer, q, r)]))
        if layer < spec.depth:
            circ.extend(cnot(q, q + 1) for q in range(spec.N - 1))
    return circ


def parameter_gate_positions(circ: Circuit) -> np.ndarray:
    """Gate positions of the shiftable rotations, in parameter order."""
    return np.array([i for i, gate in enumerate(circ) if gate.is_shiftable], dtype=int)
