"""Training command."""

import argparse

from cli.base_command import BaseCommand, CommandResult
from cli.model_file import ModelFile, save_model
from cli.output import write_csv
from dqgm.training import train
from dqgm.training_config import load_training_config
from featuremaps.feature_maps import FeatureMapKind


class TrainCommand(BaseCommand):
    """Train a generative model from a JSON config."""

    @property
    def name(self) -> str:
        return "train"

    @property
    def description(self) -> str:
        return "Train a model from a JSON config; write the model JSON and a per-epoch loss CSV"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--config", required=True, help="Training config (JSON)")
        parser.add_argument("--out", required=True, help="Model file to write (JSON)")
        parser.add_argument("--loss-out", default=None, help="Loss history CSV (epoch,loss)")
        parser.add_argument("--map", choices=[k.value for k in FeatureMapKind], default=None,
                            help="Override the config's feature map")

    def execute(self, args: argparse.Namespace) -> CommandResult:
        cfg = load_training_config(args.config)
        if args.map is not None:
            cfg = cfg.model_copy(update={"feature_map": FeatureMapKind(args.map)})
        result = train(cfg)
        model = ModelFile.from_result(cfg, result)
        model_path = save_model(args.out, model)
        loss_path = None
        if args.loss_out:
            loss_path = write_csv(
                args.loss_out, ("epoch", "loss"), enumerate(map(float, result.history)), model.config_hash,
            )
        return CommandResult(
            success=True,
            data={
                "final_loss": result.final_loss,
                "best_loss": result.best_loss,
                "best_epoch": result.best_epoch,
                "final_grad_max_norm": result.final_grad_max_norm,
            },
            metadata={
                "command": self.name,
                "config_hash": model.config_hash,
                "out": str(model_path),
                "loss_out": str(loss_path) if loss_path else None,
            },
        )
