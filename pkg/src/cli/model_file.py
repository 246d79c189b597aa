"""JSON model files written by ``train`` and read by ``sample``/``derivative``."""

from pathlib import Path
from typing import List, Union

from pydantic import BaseModel, ConfigDict, ValidationError

from cli.output import read_json, write_json
from dqgm.ansatz import AnsatzSpec, ModelParams
from dqgm.training import TrainingResult
from dqgm.training_config import TrainingConfig
from featuremaps.feature_maps import FeatureMapKind
from utils.config import __version__
from utils.exceptions import ConfigurationError


class ModelFile(BaseModel):
    """Trained parameters plus the config that produced them."""
    model_config = ConfigDict(extra="forbid")

    version: str
    config_hash: str
    config: TrainingConfig
    ansatz: AnsatzSpec
    feature_map: FeatureMapKind
    theta: List[float]
    final_loss: float
    best_loss: float
    best_epoch: int
    final_grad_max_norm: float

    def params(self) -> ModelParams:
        if self.ansatz != self.config.ansatz():
            raise ConfigurationError("Model ansatz does not match its embedded training config")
        return ModelParams(theta=self.theta, ansatz=self.ansatz)

    @classmethod
    def from_result(cls, cfg: TrainingConfig, result: TrainingResult) -> "ModelFile":
        return cls(
            version=__version__,
            config_hash=cfg.config_hash(),
            config=cfg,
            ansatz=result.params.ansatz,
            feature_map=cfg.feature_map,
            theta=[float(t) for t in result.params.theta],
            final_loss=result.final_loss,
            best_loss=result.best_loss,
            best_epoch=result.best_epoch,
            final_grad_max_norm=result.final_grad_max_norm,
        )


def save_model(path: Union[str, Path], model: ModelFile) -> Path:
    return write_json(path, model.model_dump(mode="json"))


def load_model(path: Union[str, Path]) -> ModelFile:
    """Read a model file; schema mismatches are configuration errors."""
    try:
        return ModelFile.model_validate(read_json(path))
    except ValidationError as e:
        raise ConfigurationError(f"{path} is not a valid model file: {e}") from e
