#!/usr/bin/env python3
"""
Main entry point for heislift.

Run as 'heislift <command>' after installation, or as 'python -m heislift.main'.
"""

import logging
import sys
from typing import List, Optional

from heislift.cli import (
    build_parser, build_run_config, config_error_message, lift_command, check_contact_command,
    distortion_command, curve_lift_command, holonomy_command, catalog_list_command,
    load_lifted_map_command, exit_code_for
)
from heislift.config import EXIT_USAGE
from heislift.errors import HeisliftError
from heislift.utils import status_line

COMMANDS = {
    'lift': lift_command,
    'check-contact': check_contact_command,
    'distortion': distortion_command,
    'curve-lift': curve_lift_command,
    'holonomy': holonomy_command,
    'catalog list': catalog_list_command,
    'lifted-map load': load_lifted_map_command,
}


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Parse the command line, run the command and return its exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(getattr(args, 'verbose', False))

    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        config = build_run_config(args)
    except HeisliftError as e:
        status_line(False, str(e))
        return exit_code_for(e)
    except ValueError as e:
        status_line(False, config_error_message(e))
        return EXIT_USAGE

    result = COMMANDS[config.command](config)
    return result['exit_code']


if __name__ == "__main__":
    sys.exit(main())
