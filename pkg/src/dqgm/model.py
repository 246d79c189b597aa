"""Explicit probability model ``p(x) = |<b(x)|psi(theta)>|^2``.

``b(x)`` is the unnormalized Chebyshev state ``tau(x)`` for the Chebyshev
model or the Fourier state for the phase model, and
``psi(theta) = V(theta)|0>``. Summed over the node grid the model is
normalized for any ``theta``.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from chebmath.geff import g_eff_matrix
from chebmath.grid import chebyshev_nodes
from chebmath.polynomials import ArrayLike, check_domain
from chebmath.tau import tau_coefficients, tau_derivative_coeffs, tau_norm
from dqgm.ansatz import ModelParams, hea_circuit
from dqgm.targets import TargetDistribution, target_density
from dqgm.training_config import TrainingConfig
from featuremaps.feature_maps import (
    FeatureMapKind,
    phase_feature_map_circuit,
    phase_state_coefficients,
    phase_state_derivative,
    prepare_tau_tilde,
)
from simcore.gates import Gate
from simcore.kernels import apply_gate_array
from simcore.statevector import Statevector, apply_circuit, inner_product, zero_state
from utils.exceptions import DomainError, UsageError
from utils.resources import ResourceManager

logger = logging.getLogger(__name__)

DERIVATIVE_PATHS = ("direct", "geff", "normalized")
SHIFT = np.pi / 2


def _as_output(values: np.ndarray) -> ArrayLike:
    return float(values) if np.ndim(values) == 0 else values


def _check_phase_domain(x: ArrayLike) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr >= 1.0):
        raise DomainError("Phase model needs x in [0, 1)")
    return arr


def model_state(params: ModelParams) -> Statevector:
    """``V(theta)|0...0>``."""
    return apply_circuit(zero_state(params.N), hea_circuit(params))


def basis_amplitudes(feature_map: FeatureMapKind, N: int, x: ArrayLike) -> np.ndarray:
    """Amplitudes of ``b(x)``; a trailing axis of length ``2^N`` is added to ``x``."""
    if FeatureMapKind(feature_map) is FeatureMapKind.CHEBYSHEV:
        return tau_coefficients(N, check_domain(x))
    return phase_state_coefficients(N, _check_phase_domain(x))


def model_prob(params: ModelParams, x: ArrayLike,
               feature_map: FeatureMapKind = FeatureMapKind.CHEBYSHEV) -> ArrayLike:
    """Shot-free model probability at ``x`` (scalar or array)."""
    psi = model_state(params).amplitudes
    amps = basis_amplitudes(feature_map, params.N, x).conj() @ psi
    return _as_output(np.abs(amps) ** 2)


def model_prob_circuit(params: ModelParams, x: float,
                       feature_map: FeatureMapKind = FeatureMapKind.CHEBYSHEV) -> float:
    """Model probability with ``b(x)`` prepared by its feature-map circuit.

    The Chebyshev route post-selects ``tau~(x)`` and restores the norm,
    ``p = N(x)^2 |<tau~(x)|psi>|^2``.
    """
    psi = model_state(params)
    if FeatureMapKind(feature_map) is FeatureMapKind.CHEBYSHEV:
        prepared = prepare_tau_tilde(params.N, x)
        return float(tau_norm(params.N, x) ** 2 * abs(inner_product(prepared.state, psi)) ** 2)
    phi = apply_circuit(zero_state(params.N), phase_feature_map_circuit(params.N, x))
    return float(abs(inner_product(phi, psi)) ** 2)


def _chebyshev_pair(N: int, x: np.ndarray, path: str) -> Tuple[np.ndarray, np.ndarray]:
    """``tau(x)`` and ``tau'(x)`` amplitudes along the last axis."""
    tau = tau_coefficients(N, x)
    if path == "direct":
        return tau, tau_derivative_coeffs(N, x)
    if path == "geff":
        return tau, g_eff_matrix(N).apply(tau)
    # product rule through the normalized state: tau = N(x) tau~, tau' = N' tau~ + N tau~'
    norm = np.asarray(tau_norm(N, x))[..., None]
    tilde = tau / norm
    raw_dx = tau_derivative_coeffs(N, x)
    norm_dx = np.sum(tau * raw_dx, axis=-1, keepdims=True) / norm
    tilde_dx = raw_dx / norm - tilde * norm_dx / norm
    return tau, norm_dx * tilde + norm * tilde_dx


def model_prob_dx(params: ModelParams, x: ArrayLike, path: str = "direct",
                  feature_map: FeatureMapKind = FeatureMapKind.CHEBYSHEV) -> ArrayLike:
    """``dp/dx = 2 Re[<b'(x)|psi> <psi|b(x)>]``.

    For the Chebyshev model ``path`` selects how ``tau'`` is obtained:
    ``"direct"`` (second-kind recurrence), ``"geff"`` (derivative generator on
    ``tau``) or ``"normalized"`` (product rule over ``N(x) tau~(x)``).
    """
    if path not in DERIVATIVE_PATHS:
        raise UsageError(f"Unknown derivative path '{path}', expected one of {DERIVATIVE_PATHS}")
    psi = model_state(params).amplitudes
    if FeatureMapKind(feature_map) is FeatureMapKind.CHEBYSHEV:
        b, b_dx = _chebyshev_pair(params.N, check_domain(x), path)
    else:
        if path != "direct":
            raise UsageError("The phase model only has the direct derivative path")
        arr = _check_phase_domain(x)
        b, b_dx = phase_state_coefficients(params.N, arr), phase_state_derivative(params.N, arr)
    amp = b.conj() @ psi
    amp_dx = b_dx.conj() @ psi
    return _as_output(2.0 * np.real(amp_dx * amp.conj()))


@dataclass(frozen=True)
class TrainingSet:
    """Training points with their normalized target values."""
    x: np.ndarray
    target: np.ndarray
    feature_map: FeatureMapKind = FeatureMapKind.CHEBYSHEV
    scale: float = 1.0

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float).reshape(-1)
        target = np.asarray(self.target, dtype=float).reshape(-1)
        if x.shape != target.shape or x.size == 0:
            raise UsageError("Training set needs matching, non-empty point and target arrays")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "feature_map", FeatureMapKind(self.feature_map))

    def __len__(self) -> int:
        return self.x.shape[0]


def model_grid(feature_map: FeatureMapKind, N: int) -> np.ndarray:
    """Points where the model's basis states are orthonormal."""
    if FeatureMapKind(feature_map) is FeatureMapKind.CHEBYSHEV:
        return np.asarray(chebyshev_nodes(N).nodes)
    return np.arange(2 ** N) / 2 ** N


def normalization_scale(target: TargetDistribution, feature_map: FeatureMapKind, N: int) -> float:
    """Constant that makes the target sum to one over the full model grid."""
    total = float(np.sum(target_density(target, model_grid(feature_map, N))))
    if total <= 0.0:
        raise UsageError("Target density vanishes on every grid point")
    return 1.0 / total


def training_points(feature_map: FeatureMapKind, N: int, midpoints: bool = True) -> np.ndarray:
    """Training abscissae in increasing order.

    Chebyshev: the positive nodes plus the midpoints between consecutive
    positive nodes. Phase: ``j / 2^N`` plus the midpoints between them.
    """
    if FeatureMapKind(feature_map) is FeatureMapKind.CHEBYSHEV:
        base = np.sort(chebyshev_nodes(N).positive())
    else:
        base = model_grid(feature_map, N)
    if not midpoints or base.size < 2:
        return base.copy()
    mids = 0.5 * (base[:-1] + base[1:])
    return np.sort(np.concatenate([base, mids]))


def build_training_set(cfg: TrainingConfig) -> TrainingSet:
    """Training grid with targets scaled to unit sum over the model grid."""
    xs = training_points(cfg.feature_map, cfg.qubits, cfg.midpoints)
    scale = normalization_scale(cfg.target, cfg.feature_map, cfg.qubits)
    targets = scale * np.asarray(target_density(cfg.target, xs))
    logger.debug("Training set: %d points, normalization scale %.6e", xs.size, scale)
    return TrainingSet(x=xs, target=targets, feature_map=cfg.feature_map, scale=scale)


def mse_loss(params: ModelParams, training_set: TrainingSet) -> float:
    """Mean squared error between model and target over the training points."""
    probs = model_prob(params, training_set.x, training_set.feature_map)
    return float(np.mean((np.asarray(probs) - training_set.target) ** 2))


def _shift(gate: Gate, delta: float) -> Gate:
    return gate.with_angle(gate.params[0] + delta)


def loss_and_grad(params: ModelParams, training_set: TrainingSet) -> Tuple[float, np.ndarray]:
    """MSE loss and its exact gradient by the two-point parameter-shift rule.

    For every rotation ``dp/dtheta = (p(theta + pi/2) - p(theta - pi/2)) / 2``
    at each training point. A forward sweep stores the state before each gate;
    a backward sweep carries the basis states of all training points through
    the adjoint of the gates after it, so each shifted evaluation is a single
    gate application and an overlap.
    """
    circ = hea_circuit(params)
    n = params.N
    gates = circ.gates
    # prefix states plus one column per training point
    ResourceManager.ensure_statevector_fits(n, batch=len(gates) + 1 + len(training_set))

    prefix = [zero_state(n).amplitudes]
    for gate in gates:
        prefix.append(apply_gate_array(prefix[-1], gate, n))

    # columns |b_i>, conjugated overlaps give <b_i|phi>
    bras = basis_amplitudes(training_set.feature_map, n, training_set.x).T.astype(np.complex128)
    probs = np.abs(bras.conj().T @ prefix[-1]) ** 2
    residual = probs - training_set.target
    loss = float(np.mean(residual ** 2))
    weights = 2.0 * residual / len(training_set)

    grad = np.zeros(params.ansatz.n_params)
    p = params.ansatz.n_params
    for pos in range(len(gates) - 1, -1, -1):
        gate = gates[pos]
        if gate.is_shiftable:
            p -= 1
            plus = apply_gate_array(prefix[pos], _shift(gate, SHIFT), n)
            minus = apply_gate_array(prefix[pos], _shift(gate, -SHIFT), n)
            dp = 0.5 * (np.abs(bras.conj().T @ plus) ** 2 - np.abs(bras.conj().T @ minus) ** 2)
            grad[p] = float(np.dot(weights, dp))
        bras = apply_gate_array(bras, gate.dagger(), n)
    return loss, grad


def grad_theta(params: ModelParams, training_set: TrainingSet) -> np.ndarray:
    """Exact gradient of :func:`mse_loss` with respect to ``theta``."""
    return loss_and_grad(params, training_set)[1]
