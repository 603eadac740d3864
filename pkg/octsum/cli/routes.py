"""Main command router that registers all command modules."""

import argparse
import sys
from typing import List, Optional

from .. import __version__
from ..utils.error_utils import OctsumError, handle_exception
from ..utils.log_utils import cli_logger
from . import escalation_commands, number_commands, verify_commands

USAGE_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    """Parser with every subcommand registered."""
    parser = argparse.ArgumentParser(
        prog="octsum",
        description="Representability, escalation and bounded verification for sums of generalized octagonal numbers",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    subparsers = parser.add_subparsers(dest="command", required=True)
    number_commands.register(subparsers)
    escalation_commands.register(subparsers)
    verify_commands.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (sys.argv[1:] when None)

    Returns:
        Exit code: 0 success or pass, 1 fail or not represented, 2 usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE_ERROR if e.code else 0

    cli_logger.debug(f"Command: {args.command}")
    try:
        return args.handler(args)
    except OctsumError as e:
        error = handle_exception(e, context=args.command)
        print(f"error: {error['message']}", file=sys.stderr)
        return error["exit_code"]


def main_entry() -> None:
    """Console-script entry point."""
    sys.exit(main())
