#!/usr/bin/env python3
"""
Display utility functions for heislift.

This module provides functions for formatting and displaying data to the user.
"""

import sys
from typing import Dict, List

from heislift.models.reports import CatalogDescriptor


def format_catalog_table_row(entry: CatalogDescriptor, truncate_description: int = 40) -> Dict[str, str]:
    """
    Format a catalog descriptor for table display.

    Parameters:
        entry (CatalogDescriptor): The catalog family
        truncate_description (int): Length to truncate the description to (0 for no truncation)

    Returns:
        dict: Dictionary with formatted fields for display
    """
    params = ", ".join(f"{key}={value:g}" for key, value in entry.params.items()) or "-"

    description = entry.description
    if description and truncate_description > 0 and len(description) > truncate_description:
        description = description[:truncate_description] + "..."

    return {
        'name': entry.name,
        'kind': entry.kind,
        'params': params,
        'psi': "✓" if entry.closed_form_psi else "✗",
        'lift': "✓" if entry.closed_form_lift else "✗",
        'mu': "✓" if entry.expected_mu else "✗",
        'description': description,
    }


def print_catalog_table(entries: List[CatalogDescriptor], header: bool = True) -> None:
    """
    Print a formatted table of catalog families.

    Parameters:
        entries (list): Catalog descriptors
        header (bool): Whether to print the table header
    """
    if not entries:
        print("No catalog entries.")
        return

    if header:
        print(f"\nCatalog entries: {len(entries)}\n")
        print(f"{'Name':<18} {'Kind':<5} {'Parameters':<34} {'psi':<4} {'lift':<5} {'mu':<3} {'Description'}")
        print("-" * 115)

    for entry in entries:
        row = format_catalog_table_row(entry)
        print(f"{row['name']:<18} {row['kind']:<5} {row['params']:<34} {row['psi']:<4} "
              f"{row['lift']:<5} {row['mu']:<3} {row['description']}")

    print()


def status_line(ok: bool, message: str) -> None:
    """Print a human diagnostic with a check or cross marker to stderr."""
    print(f"{'✓' if ok else '✗'} {message}", file=sys.stderr)
