#!/usr/bin/env python3
"""
Utility functions for heislift.

This package provides numerical kernels, sample grids and report output helpers
used throughout the application.
"""

from .numerics import (
    fd_step, central_difference, gradient, wirtinger, sample_derivative,
    gauss_legendre_panel, adaptive_quad, cumulative_quad, composite_quad
)

from .file_utils import (
    ensure_dir_exists, save_to_file, json_document, csv_rows
)

from .display_utils import (
    format_catalog_table_row, print_catalog_table, status_line
)

__all__ = [
    'fd_step', 'central_difference', 'gradient', 'wirtinger', 'sample_derivative',
    'gauss_legendre_panel', 'adaptive_quad', 'cumulative_quad', 'composite_quad',
    'ensure_dir_exists', 'save_to_file', 'json_document', 'csv_rows',
    'format_catalog_table_row', 'print_catalog_table', 'status_line'
]
