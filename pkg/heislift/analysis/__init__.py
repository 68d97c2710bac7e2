#!/usr/bin/env python3
"""
Contact and quasiconformal analysis of maps of H* and H.
"""

from .maps import Partials, StarMap, FunctionMap, identity_map, partials_from_gradient
from .contact import (
    FrameDerivatives, ContactReport, CirclesReport, contact_tolerance, derivatives_from_partials,
    frame_derivatives, contact_residuals, lambda_star, distortion, beltrami, heisenberg_beltrami,
    second_component_beltrami, jacobian, analyse_point, fibre_residual, circles_preserving_check,
    fibre_winding
)

__all__ = [
    'Partials', 'StarMap', 'FunctionMap', 'identity_map', 'partials_from_gradient',
    'FrameDerivatives', 'ContactReport', 'CirclesReport', 'contact_tolerance',
    'derivatives_from_partials', 'frame_derivatives', 'contact_residuals', 'lambda_star',
    'distortion', 'beltrami', 'heisenberg_beltrami', 'second_component_beltrami', 'jacobian',
    'analyse_point', 'fibre_residual', 'circles_preserving_check', 'fibre_winding'
]
