"""Main entry point for chebq."""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Add src to path so the top-level packages import by name
current_dir = Path(__file__).parent
sys.path.insert(0, str(current_dir))

from colorama import Fore, Style, just_fix_windows_console

from cli.command_registry import CommandRegistry
from utils.config import __version__, config
from utils.exceptions import ChebqError


class ChebqArgumentParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def create_env_template() -> bool:
    """Create a .env template file."""
    env_template = """# chebq configuration

# Directory for relative output paths
CHEBQ_OUTPUT_DIR=.

# Logging level (DEBUG, INFO, WARNING, ERROR)
CHEBQ_LOG_LEVEL=INFO

# Simulator limits
CHEBQ_MAX_QUBITS=24
CHEBQ_MEMORY_HEADROOM=0.5

# Seed used when a command gets no --seed
CHEBQ_DEFAULT_SEED=1234
"""
    env_path = Path(".env")
    if not env_path.exists():
        with open(env_path, "w") as f:
            f.write(env_template)
        print(f"Created .env template file at {env_path.absolute()}")
        return True
    print(f".env already exists at {env_path.absolute()}")
    return False


def build_parser(registry: CommandRegistry) -> argparse.ArgumentParser:
    parser = ChebqArgumentParser(
        prog="chebq",
        description="chebq - quantum Chebyshev feature maps, transforms and generative models",
    )
    parser.add_argument("--version", action="version", version=f"chebq {__version__}")
    parser.add_argument("--setup", action="store_true", help="Create .env template file")
    parser.add_argument("--log-level", default=None, help="Override CHEBQ_LOG_LEVEL")
    registry.add_subparsers(parser)
    return parser


def _report(result) -> None:
    if result.success:
        print(f"{Fore.GREEN}✔ {result.metadata.get('command', '')} ok{Style.RESET_ALL}", file=sys.stderr)
    else:
        print(f"{Fore.RED}✘ {result.error}{Style.RESET_ALL}", file=sys.stderr)
    for key, value in (result.data or {}).items():
        print(f"{Fore.CYAN}  {key}: {value}{Style.RESET_ALL}", file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point; returns the process exit code."""
    just_fix_windows_console()
    registry = CommandRegistry()
    parser = build_parser(registry)
    args = parser.parse_args(argv)

    level = (args.log_level or config.log_level).upper()
    logging.basicConfig(
        level=level if isinstance(logging.getLevelName(level), int) else logging.INFO,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )

    if args.setup:
        create_env_template()
        return 0
    if not args.command:
        parser.print_help()
        return 1

    try:
        config.validate()
        result = registry.execute_command(args.command, args)
    except KeyboardInterrupt:
        print("\nInterrupted")
        return 130
    except ChebqError as e:
        print(f"{Fore.RED}✘ {type(e).__name__}: {e}{Style.RESET_ALL}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        print(f"{Fore.RED}✘ Unexpected error: {e}{Style.RESET_ALL}", file=sys.stderr)
        import traceback
        traceback.print_exc()
        return 1

    _report(result)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
