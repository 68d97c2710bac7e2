#!/usr/bin/env python3
"""
Command-line interface package for heislift.

This package provides the argument parser and the subcommand implementations.
"""

from .parser import parse_args, build_parser, build_run_config, config_error_message
from .commands import (
    lift_command, check_contact_command, distortion_command, curve_lift_command,
    holonomy_command, catalog_list_command, load_lifted_map_command, exit_code_for
)

__all__ = [
    'parse_args', 'build_parser', 'build_run_config', 'config_error_message',
    'lift_command', 'check_contact_command', 'distortion_command', 'curve_lift_command',
    'holonomy_command', 'catalog_list_command', 'load_lifted_map_command', 'exit_code_for'
]
