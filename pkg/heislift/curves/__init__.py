#!/usr/bin/env python3
"""
Horizontal curves in H and H*.

This package provides:
- Curve values with analytic or spline evaluators
- Horizontality defect, horizontal and hyperbolic lengths
- Horizontal lifts and holonomy of closed curves
- Curve file reading and writing
"""

from .curve import Curve, CurveKind, CurveEvaluator, FunctionEvaluator, SplineEvaluator
from .horizontal import (
    horizontality_defect, horizontal_length_heis, horizontal_length_star, hyperbolic_length,
    lift_plane_curve_heis, lift_hyperbolic_curve, holonomy_closed, grid_area
)
from .io import read_curve, format_curve, curve_from_payload, curve_to_payload

__all__ = [
    'Curve', 'CurveKind', 'CurveEvaluator', 'FunctionEvaluator', 'SplineEvaluator',
    'horizontality_defect', 'horizontal_length_heis', 'horizontal_length_star', 'hyperbolic_length',
    'lift_plane_curve_heis', 'lift_hyperbolic_curve', 'holonomy_closed', 'grid_area',
    'read_curve', 'format_curve', 'curve_from_payload', 'curve_to_payload'
]
