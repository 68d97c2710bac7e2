#!/usr/bin/env python3
"""
Configuration module for heislift.

This module contains constants and configuration settings used throughout the application.
"""

import numpy as np

# Point validity
STAR_POINT_MIN_MODULUS = 1e-150
ZERO_IMAGE_THRESHOLD = 1e-150
SINGULAR_DENOMINATOR = 1e-300
SU11_DETERMINANT_TOL = 1e-12
CATALOG_DETERMINANT_TOL = 1e-10

# Finite differences
FD_STEP_EXPONENT = 1.0 / 5.0
FD_BASE_STEP = float(np.finfo(float).eps) ** FD_STEP_EXPONENT

# Quadrature
GAUSS_LEGENDRE_NODES = 5
QUADRATURE_REL_TOL = 1e-10
QUADRATURE_ABS_TOL = 1e-13
QUADRATURE_MAX_DEPTH = 24
QUADRATURE_REL_TOL_FD = 1e-8
QUADRATURE_ABS_TOL_FD = 1e-10
POTENTIAL_PANELS = 4

# Tolerances
CONTACT_TOL_ANALYTIC = 1e-6
CONTACT_TOL_FD = 1e-4
SYMPLECTIC_TOL_ANALYTIC = 1e-7
SYMPLECTIC_TOL_FD = 1e-4
HORIZONTAL_TOL = 1e-6
CIRCLES_PRESERVING_TOL = 1e-6
JACOBIAN_REL_TOL = 1e-5
CLOSEDNESS_REL_TOL = 1e-9
GRID_AREA_TOL = 1e-4
JF_FLOOR = 1e-12
WINDING_QUAD_REL_TOL = 1e-9

# Curves
MIN_CURVE_SAMPLES = 3
GRID_AREA_COLUMNS = 4000
GRID_AREA_POLYGON_NODES = 4000

# Lifting
DEFAULT_BASEPOINT = -1.0 + 0.0j
DEFAULT_PHASE = 0.0

# Standard test grid
GRID_RADII = (0.25, 0.5, 1.0, 2.0, 4.0)
GRID_ANGLES = 16
GRID_HEIGHTS = (-2.0, -1.0, 0.0, 1.0, 2.0)
GRID_MIN_RADIUS = 0.05

# Output
REPORT_SCHEMA_VERSION = 1
CSV_FLOAT_FORMAT = '%.17g'

# Exit codes
EXIT_OK = 0
EXIT_RESIDUAL_BREACH = 1
EXIT_NOT_SYMPLECTIC = 2
EXIT_QUADRATURE_FAILURE = 3
EXIT_MALFORMED_CURVE = 4
EXIT_USAGE = 5
