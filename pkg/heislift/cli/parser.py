#!/usr/bin/env python3
"""
Command-line argument parser for heislift.

This module defines the CLI argument parser using argparse and turns the parsed
arguments into a validated RunConfig.
"""

import argparse
import json
import sys
from typing import List, Optional

from pydantic import ValidationError

from heislift.catalog import parse_map_spec
from heislift.config import EXIT_USAGE
from heislift.models import GridSpec, RunConfig


class HeisliftArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with the heislift usage exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _complex_arg(text: str) -> complex:
    try:
        return complex(text.replace(' ', ''))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="Log debug messages to stderr")
    common.add_argument("-o", "--out", help="Write the report to this file instead of stdout")
    common.add_argument("--format", choices=["json", "csv"], help="Report format")
    return common


def _grid_options() -> argparse.ArgumentParser:
    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--grid", help='Grid as JSON, e.g. \'{"radii": [0.5, 1], "angles": 8, "heights": [0]}\'')
    grid.add_argument("--allow-small-radius", action="store_true", help="Permit grid radii below 0.05")
    grid.add_argument("--tol", type=float, help="Residual tolerance (default depends on the map)")
    grid.add_argument("--workers", type=int, default=1, help="Worker threads for the grid sweep (default: 1)")
    grid.add_argument("--progress", action="store_true", help="Show a progress bar on stderr")
    return grid


def _lift_options() -> argparse.ArgumentParser:
    lift = argparse.ArgumentParser(add_help=False)
    lift.add_argument("--force", action="store_true", help="Lift even if the symplectic gate fails")
    lift.add_argument("--basepoint", type=_complex_arg,
                      help="Potential basepoint, e.g. --basepoint=-2+0.5j (default: -1 on L, 0 on C)")
    lift.add_argument("--phase", type=float, default=0.0, help="Constant added to the potential (default: 0)")
    return lift


def build_parser() -> argparse.ArgumentParser:
    """Build the heislift argument parser."""
    parser = HeisliftArgumentParser(
        prog="heislift",
        description="Contact and quasiconformal lifts on the Heisenberg groups"
    )
    common, grid, lift = _common_options(), _grid_options(), _lift_options()

    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    # Lift command
    lift_parser = subparsers.add_parser("lift", parents=[common, grid, lift],
                                        help="Lift a symplectic planar map and report on the grid")
    lift_parser.add_argument("--map", required=True, help="Catalog name or JSON map specification")

    # Contact and distortion commands
    for name, text in (("check-contact", "Check the contact condition of a map on the grid"),
                       ("distortion", "Report stretches, K, mu and the Jacobian identity on the grid")):
        check_parser = subparsers.add_parser(name, parents=[common, grid], help=text)
        check_parser.add_argument("--map", required=True, help="Catalog name or JSON map specification")

    # Curve commands
    for name, text in (("curve-lift", "Horizontally lift a plane or hyperbolic curve"),
                       ("holonomy", "Holonomy of the horizontal lift of a closed curve")):
        curve_parser = subparsers.add_parser(name, parents=[common], help=text)
        curve_parser.add_argument("--in", dest="input", required=True, help="Curve file (CSV or JSON)")
        curve_parser.add_argument("--kind", choices=["heis", "star", "plane", "hyperbolic"],
                                  help="Target group (heis, star) or source curve kind (plane, hyperbolic)")
        curve_parser.add_argument("--tol", type=float, help="Holonomy residual tolerance (default: 1e-6)")

    # Catalog command
    catalog_parser = subparsers.add_parser("catalog", help="Catalog of example maps")
    catalog_sub = catalog_parser.add_subparsers(dest="action", required=True)
    catalog_sub.add_parser("list", parents=[common], help="List catalog families (a table unless --format is given)")

    # Lifted-map command
    lifted_parser = subparsers.add_parser("lifted-map", help="Stored lifted-map descriptors")
    lifted_sub = lifted_parser.add_subparsers(dest="action", required=True)
    load_parser = lifted_sub.add_parser("load", parents=[common, grid],
                                        help="Reload a lifted map from its descriptor and report on the grid")
    load_parser.add_argument("--in", dest="input", required=True,
                             help="Descriptor JSON, or a lift report containing one")

    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command-line arguments."""
    return build_parser().parse_args(argv)


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """
    Validate parsed arguments into a RunConfig.

    Parameters:
        args (Namespace): Parsed arguments

    Returns:
        RunConfig: The validated configuration

    Raises:
        ValueError: If the grid or another option does not validate
        UnknownCatalogEntry: If --map is neither a name nor a JSON object
    """
    command = args.command
    if getattr(args, 'action', None):
        command = f"{command} {args.action}"

    grid = GridSpec(allow_small_radius=getattr(args, 'allow_small_radius', False))
    if getattr(args, 'grid', None):
        try:
            data = json.loads(args.grid)
        except json.JSONDecodeError as e:
            raise ValueError(f"--grid is not valid JSON: {e}")
        if not isinstance(data, dict):
            raise ValueError("--grid must be a JSON object")
        data.setdefault('allow_small_radius', grid.allow_small_radius)
        grid = GridSpec.model_validate(data)

    map_text = getattr(args, 'map', None)
    return RunConfig(
        command=command,
        map_spec=parse_map_spec(map_text) if map_text else None,
        grid=grid,
        tol=getattr(args, 'tol', None),
        input_path=getattr(args, 'input', None),
        output_path=getattr(args, 'out', None),
        output_format=getattr(args, 'format', None),
        force=getattr(args, 'force', False),
        basepoint=getattr(args, 'basepoint', None),
        phase=getattr(args, 'phase', 0.0),
        curve_kind=getattr(args, 'kind', None),
        workers=getattr(args, 'workers', 1),
        progress=getattr(args, 'progress', False),
    )


def config_error_message(error: Exception) -> str:
    """One-line message for a configuration error."""
    if isinstance(error, ValidationError):
        first = error.errors()[0]
        location = '.'.join(str(part) for part in first.get('loc', ())) or 'config'
        return f"invalid {location}: {first.get('msg')}"
    return str(error)
