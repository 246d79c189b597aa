"""Circuit/oracle equivalence suite for the Chebyshev transform."""

import argparse
import logging

from cli.base_command import BaseCommand, CommandResult
from qcht.circuit import EQUIVALENCE_TOLERANCE, MAX_QCHT_QUBITS, build_qcht_circuit, verify_qcht_circuit
from simcore.circuit import Circuit
from utils.exceptions import UsageError, VerificationError

logger = logging.getLogger(__name__)

CORRUPTION_ANGLE = 1e-3


def corrupt(circ: Circuit) -> Circuit:
    """Copy of ``circ`` with the first angle-carrying gate perturbed."""
    broken = circ.copy()
    for i, gate in enumerate(broken.gates):
        if gate.is_shiftable:
            broken.gates[i] = gate.with_angle(gate.params[0] + CORRUPTION_ANGLE)
            return broken
    raise UsageError("Circuit has no rotation to perturb")


class QChTVerifyCommand(BaseCommand):
    """Compare the transform circuit against the DCT-II oracle."""

    @property
    def name(self) -> str:
        return "qcht-verify"

    @property
    def description(self) -> str:
        return "Check the Chebyshev transform circuit against its matrix oracle and ancilla cleanliness"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--qubits", type=int, required=True, help="System register size N")
        parser.add_argument("--max-qubits", type=int, default=MAX_QCHT_QUBITS,
                            help="Refuse sizes above this bound")
        parser.add_argument("--self-test-corrupt", action="store_true",
                            help="Perturb one gate before verifying (the suite must fail)")

    def execute(self, args: argparse.Namespace) -> CommandResult:
        if not 1 <= args.qubits <= min(args.max_qubits, MAX_QCHT_QUBITS):
            raise UsageError(f"--qubits must lie in [1, {min(args.max_qubits, MAX_QCHT_QUBITS)}], got {args.qubits}")
        circ = build_qcht_circuit(args.qubits)
        if args.self_test_corrupt:
            logger.info("Verifying a deliberately corrupted circuit")
            circ = corrupt(circ)
        report = verify_qcht_circuit(circ, args.qubits)
        data = {
            "N": report.N,
            "max_block_deviation": report.max_block_deviation,
            "max_ancilla_leakage": report.max_ancilla_leakage,
            "gate_count": report.gate_count,
            "tolerance": EQUIVALENCE_TOLERANCE,
        }
        passed = report.passed()
        return CommandResult(
            success=passed,
            data=data,
            error=None if passed else "Circuit deviates from the oracle beyond tolerance",
            metadata={"command": self.name},
            exit_code=0 if passed else VerificationError.exit_code,
        )
