"""Base command interface for the chebq command line."""

import argparse
import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Optional

from pydantic import BaseModel

from utils.config import canonical_hash
from utils.exceptions import ChebqError

logger = logging.getLogger(__name__)


class CommandResult(BaseModel):
    """Result of a command execution."""
    success: bool
    data: Any = None
    error: Optional[str] = None
    metadata: Dict[str, Any] = {}
    exit_code: int = 0


class BaseCommand(ABC):
    """Abstract base class for subcommands."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Subcommand name."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """One-line help text."""
        pass

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Declare the subcommand's flags."""
        pass

    @abstractmethod
    def execute(self, args: argparse.Namespace) -> CommandResult:
        """Run the command with parsed arguments."""
        pass

    def run(self, args: argparse.Namespace) -> CommandResult:
        """Execute, turning library errors into a failed result with their exit code."""
        try:
            return self.execute(args)
        except ChebqError as e:
            logger.debug("Command %s failed", self.name, exc_info=True)
            return CommandResult(
                success=False,
                error=f"{type(e).__name__}: {e}",
                metadata={"command": self.name},
                exit_code=e.exit_code,
            )

    def flags_hash(self, args: argparse.Namespace, *exclude: str) -> str:
        """Content hash of the parsed flags, ignoring output paths."""
        skip = {"command", "out", "loss_out", "log_level", "setup"} | set(exclude)
        payload = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
        return canonical_hash({"command": self.name, **payload})
