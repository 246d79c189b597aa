"""Configuration management for chebq."""

import hashlib
import json
import os
from pathlib import Path
from typing import Any, Mapping, Union

from dotenv import load_dotenv

from utils.exceptions import ConfigurationError

# Load environment variables from .env file
load_dotenv()

__version__ = "0.1.0"

# Hard ceiling for dense statevectors (2^24 complex128 amplitudes = 256 MiB)
ABSOLUTE_MAX_QUBITS = 24


class Config:
    """Configuration settings for chebq."""

    def __init__(self):
        # Output settings
        self.output_dir: Path = Path(os.getenv("CHEBQ_OUTPUT_DIR", "."))
        self.log_level: str = os.getenv("CHEBQ_LOG_LEVEL", "INFO").upper()

        # Simulator settings
        self.max_qubits: int = int(os.getenv("CHEBQ_MAX_QUBITS", str(ABSOLUTE_MAX_QUBITS)))
        self.memory_headroom: float = float(os.getenv("CHEBQ_MEMORY_HEADROOM", "0.5"))

        # Experiment settings
        self.default_seed: int = int(os.getenv("CHEBQ_DEFAULT_SEED", "1234"))

    def validate(self) -> bool:
        """Validate that configuration values are consistent."""
        if not 1 <= self.max_qubits <= ABSOLUTE_MAX_QUBITS:
            raise ConfigurationError(
                f"CHEBQ_MAX_QUBITS must lie in [1, {ABSOLUTE_MAX_QUBITS}], got {self.max_qubits}"
            )
        if not 0.0 < self.memory_headroom <= 1.0:
            raise ConfigurationError(
                f"CHEBQ_MEMORY_HEADROOM must lie in (0, 1], got {self.memory_headroom}"
            )
        if self.default_seed < 0:
            raise ConfigurationError("CHEBQ_DEFAULT_SEED must be non-negative")
        return True

    def resolve_output(self, path: Union[str, Path]) -> Path:
        """Resolve a relative output path against the configured output directory."""
        path = Path(path)
        if path.is_absolute():
            return path
        return self.output_dir / path


def canonical_hash(payload: Mapping[str, Any]) -> str:
    """First 16 hex digits of the SHA-256 of the sorted-key JSON dump."""
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


# Global config instance
config = Config()
