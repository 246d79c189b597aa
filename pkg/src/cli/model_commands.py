"""Commands that evaluate a trained model file."""

import argparse

import numpy as np

from cli.base_command import BaseCommand, CommandResult
from cli.model_file import load_model
from cli.output import write_csv
from dqgm.model import DERIVATIVE_PATHS, model_prob, model_prob_dx, normalization_scale, training_points
from dqgm.sampling import sample_model
from dqgm.targets import target_density_dx
from simcore.sampling import total_variation
from utils.config import canonical_hash, config
from utils.exceptions import UsageError


class SampleCommand(BaseCommand):
    """Sample a trained model in the computational basis."""

    @property
    def name(self) -> str:
        return "sample"

    @property
    def description(self) -> str:
        return "Sample a model file; write CSV (j,x_j,count,frequency,analytic_prob)"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--model", required=True, help="Model file (JSON)")
        parser.add_argument("--shots", type=int, default=1_000_000, help="Number of shots")
        parser.add_argument("--extend", type=int, default=None, help="Extend the register to this many qubits")
        parser.add_argument("--seed", type=int, default=None, help="Sampling seed (CHEBQ_DEFAULT_SEED if omitted)")
        parser.add_argument("--out", default=None, help="Output CSV (stdout if omitted)")

    def execute(self, args: argparse.Namespace) -> CommandResult:
        if args.shots < 1:
            raise UsageError(f"--shots must be >= 1, got {args.shots}")
        model = load_model(args.model)
        seed = config.default_seed if args.seed is None else args.seed
        sample = sample_model(model.params(), args.shots, seed, args.extend, model.feature_map)

        counts = sample.count_array()
        freqs = sample.frequencies()
        rows = [
            (j, float(x), int(c), float(f), float(p))
            for j, (x, c, f, p) in enumerate(zip(sample.nodes, counts, freqs, sample.analytic))
        ]
        run_hash = canonical_hash({
            "model": model.config_hash, "shots": args.shots, "extend": args.extend, "seed": seed,
        })
        path = write_csv(args.out, ("j", "x_j", "count", "frequency", "analytic_prob"), rows, run_hash)
        tv = total_variation(freqs, sample.analytic)
        return CommandResult(
            success=True,
            data={"n_qubits": sample.n_qubits, "shots": args.shots, "total_variation": tv},
            metadata={"command": self.name, "out": str(path) if path else None},
        )


class DerivativeCommand(BaseCommand):
    """Model and target derivatives over the training domain."""

    @property
    def name(self) -> str:
        return "derivative"

    @property
    def description(self) -> str:
        return "Write dp/dx of a model file and its target as CSV (x,dpdx_model,dpdx_target,p_model)"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--model", required=True, help="Model file (JSON)")
        parser.add_argument("--points", type=int, default=201, help="Evaluation points")
        parser.add_argument("--path", choices=DERIVATIVE_PATHS, default="direct",
                            help="How the Chebyshev derivative state is obtained")
        parser.add_argument("--out", default=None, help="Output CSV (stdout if omitted)")

    def execute(self, args: argparse.Namespace) -> CommandResult:
        if args.points < 2:
            raise UsageError(f"--points must be >= 2, got {args.points}")
        model = load_model(args.model)
        cfg = model.config
        params = model.params()
        span = training_points(cfg.feature_map, cfg.qubits, cfg.midpoints)
        xs = np.linspace(span.min(), span.max(), args.points)

        p = np.asarray(model_prob(params, xs, cfg.feature_map))
        dp = np.asarray(model_prob_dx(params, xs, args.path, cfg.feature_map))
        scale = normalization_scale(cfg.target, cfg.feature_map, cfg.qubits)
        dt = scale * np.asarray(target_density_dx(cfg.target, xs))

        run_hash = canonical_hash({"model": model.config_hash, "points": args.points, "path": args.path})
        path = write_csv(
            args.out, ("x", "dpdx_model", "dpdx_target", "p_model"),
            zip(map(float, xs), map(float, dp), map(float, dt), map(float, p)), run_hash,
        )
        return CommandResult(
            success=True,
            data={"mean_abs_error": float(np.mean(np.abs(dp - dt)))},
            metadata={"command": self.name, "out": str(path) if path else None},
        )
