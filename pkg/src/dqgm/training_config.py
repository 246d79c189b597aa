"""Typed training configuration."""

import json
import logging
from pathlib import Path
from typing import Literal, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from dqgm.ansatz import AnsatzSpec
from dqgm.targets import TargetDistribution
from featuremaps.feature_maps import MAX_FEATURE_QUBITS, FeatureMapKind
from utils.config import canonical_hash, config
from utils.exceptions import ConfigurationError

logger = logging.getLogger(__name__)


class OptimizerSettings(BaseModel):
    """Update rule and its moment constants."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["adam", "gd"] = "adam"
    beta1: float = Field(default=0.9, ge=0.0, lt=1.0)
    beta2: float = Field(default=0.999, ge=0.0, lt=1.0)
    eps: float = Field(default=1e-8, gt=0.0)


class TrainingConfig(BaseModel):
    """Everything needed to reproduce one training run."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    qubits: int = Field(ge=1, le=MAX_FEATURE_QUBITS)
    depth: int = Field(ge=1)
    epochs: int = Field(ge=1)
    learning_rate: float = Field(gt=0.0)
    seed: int = Field(default_factory=lambda: config.default_seed, ge=0)
    target: TargetDistribution
    feature_map: FeatureMapKind = FeatureMapKind.CHEBYSHEV
    midpoints: bool = True
    final_rotations: bool = True
    optimizer: OptimizerSettings = OptimizerSettings()
    log_every: int = Field(default=100, ge=1)

    def ansatz(self) -> AnsatzSpec:
        return AnsatzSpec(N=self.qubits, depth=self.depth, final_rotations=self.final_rotations)

    def config_hash(self) -> str:
        return canonical_hash(self.model_dump(mode="json"))


def parse_training_config(payload: Union[dict, str]) -> TrainingConfig:
    """Validate a config mapping or JSON text; unknown keys are rejected."""
    try:
        if isinstance(payload, str):
            return TrainingConfig.model_validate_json(payload)
        return TrainingConfig.model_validate(payload)
    except ValidationError as e:
        raise ConfigurationError(f"Invalid training config: {e}") from e


def load_training_config(path: Union[str, Path]) -> TrainingConfig:
    """Read and validate a JSON training config."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(f"Cannot read training config {path}: {e}") from e
    try:
        json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"Training config {path} is not valid JSON: {e}") from e
    cfg = parse_training_config(text)
    logger.info("Loaded training config %s (hash %s)", path, cfg.config_hash())
    return cfg
