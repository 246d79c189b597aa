"""Tests for the Chebyshev and phase feature maps."""

import numpy as np
import pytest

from chebmath.grid import chebyshev_nodes
from chebmath.tau import tau_coefficients, tau_norm, tau_state
from featuremaps.feature_maps import (
    FeatureMapKind,
    FeatureMapSpec,
    chebyshev_feature_map_circuit,
    phase_feature_map_circuit,
    phase_state_coefficients,
    phase_state_derivative,
    prepare_tau_tilde,
)
from simcore.statevector import apply_circuit, fidelity, zero_state, Statevector
from utils.exceptions import ConfigurationError, DomainError


@pytest.mark.parametrize("N", range(1, 7))
def test_post_selected_state_matches_normalized_tau(N):
    rng = np.random.default_rng(100 + N)
    for x in rng.uniform(-1, 1, 200):
        prepared = prepare_tau_tilde(N, x)
        analytic = Statevector(tau_state(N, x).normalized())
        assert fidelity(prepared.state, analytic) > 1 - 1e-10


def test_ancilla_zero_branch_is_exact():
    N, x = 3, 0.37
    out = apply_circuit(zero_state(N + 1), chebyshev_feature_map_circuit(N, x))
    np.testing.assert_allclose(out.amplitudes[: 2 ** N], tau_coefficients(N, x) / np.sqrt(2), atol=1e-12)


def test_success_probability():
    for x in (-0.8, 0.0, 0.15, 0.99):
        prepared = prepare_tau_tilde(4, x)
        assert prepared.success_probability == pytest.approx(tau_norm(4, x) ** 2 / 2, rel=1e-10)
        np.testing.assert_allclose(
            np.abs(prepared.unnormalized_branch()), np.abs(tau_coefficients(4, x)) / np.sqrt(2), atol=1e-12
        )


def test_angle_independent_of_x():
    a = chebyshev_feature_map_circuit(2, 0.1)
    b = chebyshev_feature_map_circuit(2, -0.6)
    assert a.count_ops() == b.count_ops()
    assert a.gates[-3].params == b.gates[-3].params


def test_phase_map_state():
    N, x = 4, 0.3
    state = apply_circuit(zero_state(N), phase_feature_map_circuit(N, x))
    np.testing.assert_allclose(state.amplitudes, phase_state_coefficients(N, x), atol=1e-12)


def test_phase_states_orthonormal_on_grid():
    N = 3
    basis = phase_state_coefficients(N, np.arange(8) / 8)
    np.testing.assert_allclose(basis.conj() @ basis.T, np.eye(8), atol=1e-12)


def test_phase_derivative():
    N, x, h = 3, 0.21, 1e-6
    fd = (phase_state_coefficients(N, x + h) - phase_state_coefficients(N, x - h)) / (2 * h)
    np.testing.assert_allclose(phase_state_derivative(N, x), fd, atol=1e-6)


def test_spec_validation():
    assert FeatureMapSpec(kind="phase", N=2, x=0.5).kind is FeatureMapKind.PHASE
    with pytest.raises(DomainError):
        FeatureMapSpec(kind=FeatureMapKind.CHEBYSHEV, N=2, x=1.5)
    with pytest.raises(DomainError):
        FeatureMapSpec(kind=FeatureMapKind.PHASE, N=2, x=1.0)
    with pytest.raises(ConfigurationError):
        FeatureMapSpec(kind=FeatureMapKind.CHEBYSHEV, N=0, x=0.1)


def test_spec_builds_circuit():
    circ = FeatureMapSpec(kind="chebyshev", N=3, x=0.2).circuit()
    assert circ.n_qubits == 4


def test_post_selected_state_at_zero():
    prepared = prepare_tau_tilde(2, 0.0)
    # T_k(0) = 1, 0, -1, 0
    expected = Statevector.from_amplitudes([1 / np.sqrt(2), 0.0, -1.0, 0.0], normalize=True)
    assert fidelity(prepared.state, expected) == pytest.approx(1.0, abs=1e-12)


def test_phase_map_examples():
    np.testing.assert_allclose(phase_state_coefficients(3, 0.0), np.full(8, 2 ** -1.5), atol=1e-15)
    state = apply_circuit(zero_state(2), phase_feature_map_circuit(2, 0.25))
    np.testing.assert_allclose(state.amplitudes, np.array([1, 1j, -1, -1j]) / 2, atol=1e-12)


def test_post_selected_state_is_continuous():
    rng = np.random.default_rng(7)
    for x in rng.uniform(-0.99, 0.99, 50):
        a = prepare_tau_tilde(4, x).state
        b = prepare_tau_tilde(4, x + 1e-7).state
        assert fidelity(a, b) > 1 - 1e-8


@pytest.mark.parametrize("N", range(1, 6))
def test_circuit_states_orthonormal_at_nodes(N):
    states = np.array([prepare_tau_tilde(N, x).state.amplitudes for x in chebyshev_nodes(N).nodes])
    np.testing.assert_allclose(np.abs(states.conj() @ states.T), np.eye(2 ** N), atol=1e-9)
