"""Feature-map inspection command."""

import argparse

import numpy as np

from chebmath.tau import tau_state
from cli.base_command import BaseCommand, CommandResult
from cli.output import write_csv
from featuremaps.feature_maps import (
    FeatureMapKind,
    FeatureMapSpec,
    phase_state_coefficients,
    prepare_tau_tilde,
)
from simcore.statevector import Statevector, apply_circuit, fidelity, zero_state


class FeatureMapCommand(BaseCommand):
    """Prepare a feature-map state by simulation and compare with its closed form."""

    @property
    def name(self) -> str:
        return "featuremap"

    @property
    def description(self) -> str:
        return "Simulate a feature map at x and write its amplitudes as CSV next to its closed form"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--qubits", type=int, required=True, help="System register size N")
        parser.add_argument("--x", type=float, required=True, help="Encoded value")
        parser.add_argument("--map", choices=[k.value for k in FeatureMapKind],
                            default=FeatureMapKind.CHEBYSHEV.value, help="Feature map kind")
        parser.add_argument("--out", default=None, help="Output CSV (stdout if omitted)")

    def execute(self, args: argparse.Namespace) -> CommandResult:
        spec = FeatureMapSpec(kind=args.map, N=args.qubits, x=args.x)
        data = {}
        if spec.kind is FeatureMapKind.CHEBYSHEV:
            prepared = prepare_tau_tilde(spec.N, spec.x)
            state = prepared.state
            analytic = tau_state(spec.N, spec.x).normalized()
            data["success_probability"] = prepared.success_probability
        else:
            state = apply_circuit(zero_state(spec.N), spec.circuit())
            analytic = phase_state_coefficients(spec.N, spec.x)
        data["fidelity"] = fidelity(state, Statevector(analytic))

        rows = [
            (k, float(a.real), float(a.imag), float(np.real(b)), float(np.imag(b)))
            for k, (a, b) in enumerate(zip(state.amplitudes, analytic))
        ]
        path = write_csv(args.out, ("k", "real", "imag", "analytic_real", "analytic_imag"), rows, self.flags_hash(args))
        return CommandResult(
            success=True,
            data=data,
            metadata={"command": self.name, "out": str(path) if path else None},
        )
