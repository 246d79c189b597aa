"""Memory utilities for dense statevector allocation."""

import logging
from dataclasses import dataclass

import psutil

from utils.config import config
from utils.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

BYTES_PER_AMPLITUDE = 16  # complex128


@dataclass
class MemoryInfo:
    """Snapshot of host memory relevant to a statevector allocation."""
    required_bytes: int
    available_bytes: int
    budget_bytes: int


class ResourceManager:
    """Host resource checks for the simulator."""

    @staticmethod
    def statevector_bytes(n_qubits: int, batch: int = 1) -> int:
        """Bytes needed for ``batch`` dense statevectors of ``n_qubits`` qubits."""
        return BYTES_PER_AMPLITUDE * (2 ** n_qubits) * batch

    @staticmethod
    def memory_info(n_qubits: int, batch: int = 1) -> MemoryInfo:
        """Compare the allocation size against available memory."""
        available = psutil.virtual_memory().available
        return MemoryInfo(
            required_bytes=ResourceManager.statevector_bytes(n_qubits, batch),
            available_bytes=available,
            budget_bytes=int(available * config.memory_headroom),
        )

    @staticmethod
    def ensure_statevector_fits(n_qubits: int, batch: int = 1) -> None:
        """Raise if the allocation would exceed the configured memory budget."""
        info = ResourceManager.memory_info(n_qubits, batch)
        if info.required_bytes > info.budget_bytes:
            raise ConfigurationError(
                f"{n_qubits}-qubit statevector needs {info.required_bytes / 2**20:.1f} MiB "
                f"but only {info.budget_bytes / 2**20:.1f} MiB is budgeted"
            )
        if info.required_bytes > info.budget_bytes // 2:
            logger.warning(
                "Statevector of %d qubits uses %.1f MiB, over half of the memory budget",
                n_qubits, info.required_bytes / 2**20,
            )

    @staticmethod
    def current_rss_mb() -> float:
        """Resident set size of this process in MiB."""
        try:
            return psutil.Process().memory_info().rss / 2**20
        except (psutil.NoSuchProcess, psutil.AccessDenied):
            return float("nan")
