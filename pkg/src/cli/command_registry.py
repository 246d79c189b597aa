"""Command registry for the chebq command line."""

import argparse
from typing import Dict, Optional

from cli.base_command import BaseCommand, CommandResult
from cli.featuremap_command import FeatureMapCommand
from cli.grid_commands import NodesCommand, OverlapCommand
from cli.model_commands import DerivativeCommand, SampleCommand
from cli.qcht_command import QChTVerifyCommand
from cli.train_command import TrainCommand
from utils.exceptions import UsageError


class CommandRegistry:
    """Registry for subcommands."""

    def __init__(self):
        self.commands: Dict[str, BaseCommand] = {}
        self._register_default_commands()

    def _register_default_commands(self):
        default_commands = [
            NodesCommand(),
            OverlapCommand(),
            FeatureMapCommand(),
            QChTVerifyCommand(),
            TrainCommand(),
            SampleCommand(),
            DerivativeCommand(),
        ]
        for command in default_commands:
            self.register_command(command)

    def register_command(self, command: BaseCommand):
        self.commands[command.name] = command

    def get_command(self, name: str) -> Optional[BaseCommand]:
        return self.commands.get(name)

    def add_subparsers(self, parser: argparse.ArgumentParser) -> None:
        """Attach one sub-parser per registered command."""
        subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
        for command in self.commands.values():
            sub = subparsers.add_parser(command.name, help=command.description, description=command.description)
            command.add_arguments(sub)

    def execute_command(self, name: str, args: argparse.Namespace) -> CommandResult:
        command = self.get_command(name)
        if not command:
            raise UsageError(f"Command '{name}' not found")
        return command.run(args)
