#!/usr/bin/env python3
"""
Group structures of the Heisenberg group H and the hyperbolic Heisenberg group H*.

This package provides:
- Point types and group laws
- Left-invariant frames, contact forms and coframes
- The Koranyi map, the Koranyi-Cygan distance and Heisenberg similarities
- The matrix model, the SU(1,1) x U(1) action and the Siegel embedding
"""

from .points import HeisPoint, StarPoint, HypPoint, FrameVector
from .groups import (
    heis_mul, heis_inv, heis_unit, heis_gauge, koranyi_cygan_dist,
    star_mul, star_inv, star_unit, koranyi_alpha, alpha_value, left_arg,
    star_chart, star_from_chart
)
from .isometries import left_translation, rotation, conjugation, dilation, inversion
from .frames import (
    Field, Form, ScalarField, apply_field, bracket_residual, eval_form, d_form,
    contact_volume, alpha_pushforward, hyperbolic_inner, field_coefficients, frame_matrix
)
from .matrix_model import (
    J_MATRIX, SU11Element, matrix_model, matrix_params, matrix_from_params,
    star_from_matrix, su11_identity, su11_compose, su11_action
)
from .siegel import siegel_embed, siegel_defining, eta_star, pullback_residual

__all__ = [
    'HeisPoint', 'StarPoint', 'HypPoint', 'FrameVector',
    'heis_mul', 'heis_inv', 'heis_unit', 'heis_gauge', 'koranyi_cygan_dist',
    'star_mul', 'star_inv', 'star_unit', 'koranyi_alpha', 'alpha_value', 'left_arg',
    'star_chart', 'star_from_chart',
    'left_translation', 'rotation', 'conjugation', 'dilation', 'inversion',
    'Field', 'Form', 'ScalarField', 'apply_field', 'bracket_residual', 'eval_form', 'd_form',
    'contact_volume', 'alpha_pushforward', 'hyperbolic_inner', 'field_coefficients', 'frame_matrix',
    'J_MATRIX', 'SU11Element', 'matrix_model', 'matrix_params', 'matrix_from_params',
    'star_from_matrix', 'su11_identity', 'su11_compose', 'su11_action',
    'siegel_embed', 'siegel_defining', 'eta_star', 'pullback_residual'
]
