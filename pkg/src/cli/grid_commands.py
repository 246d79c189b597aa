"""Commands for Chebyshev grids and state overlaps."""

import argparse

import numpy as np

from chebmath.grid import chebyshev_nodes
from chebmath.tau import overlap_sq_direct, overlap_sq_formula
from cli.base_command import BaseCommand, CommandResult
from cli.output import write_csv
from utils.exceptions import UsageError


class NodesCommand(BaseCommand):
    """Emit the Chebyshev node grid."""

    @property
    def name(self) -> str:
        return "nodes"

    @property
    def description(self) -> str:
        return "Write the Chebyshev nodes x_j of an N-qubit register as CSV (j,x)"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--qubits", type=int, required=True, help="Register size N")
        parser.add_argument("--out", default=None, help="Output CSV (stdout if omitted)")

    def execute(self, args: argparse.Namespace) -> CommandResult:
        grid = chebyshev_nodes(args.qubits)
        rows = [(j, float(x)) for j, x in enumerate(grid.nodes)]
        path = write_csv(args.out, ("j", "x"), rows, self.flags_hash(args))
        return CommandResult(
            success=True,
            data={"rows": len(rows)},
            metadata={"command": self.name, "out": str(path) if path else None},
        )


def overlap_sweep(N: int, node: int, points: int) -> np.ndarray:
    """Uniform points strictly inside (-1, 1) merged with every node, increasing."""
    if points < 1:
        raise UsageError(f"--points must be >= 1, got {points}")
    uniform = -1.0 + (2 * np.arange(points) + 1) / points
    return np.unique(np.concatenate([uniform, chebyshev_nodes(N).nodes]))


class OverlapCommand(BaseCommand):
    """Squared overlap of a node state with the Chebyshev state at x."""

    @property
    def name(self) -> str:
        return "overlap"

    @property
    def description(self) -> str:
        return "Write |<tau(x_j)|tau(x)>|^2 over a sweep of x as CSV (x,overlap_sq)"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--qubits", type=int, required=True, help="Register size N")
        parser.add_argument("--node", type=int, required=True, help="Node index j of x'")
        parser.add_argument("--points", type=int, default=512, help="Uniform sweep points")
        parser.add_argument("--out", default=None, help="Output CSV (stdout if omitted)")

    def execute(self, args: argparse.Namespace) -> CommandResult:
        grid = chebyshev_nodes(args.qubits)
        x_prime = grid.value(args.node)
        xs = overlap_sweep(args.qubits, args.node, args.points)
        values = [overlap_sq_formula(args.qubits, x_prime, float(x)) for x in xs]
        deviation = max(abs(v - overlap_sq_direct(args.qubits, x_prime, float(x))) for x, v in zip(xs, values))
        path = write_csv(args.out, ("x", "overlap_sq"), zip(map(float, xs), values), self.flags_hash(args))
        return CommandResult(
            success=True,
            data={"rows": len(values), "max_formula_deviation": deviation},
            metadata={"command": self.name, "out": str(path) if path else None},
        )
