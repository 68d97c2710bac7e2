#!/usr/bin/env python3
"""
Numerical kernels for heislift.

This module provides:
- Fourth-order central differences for functions of a real vector
- Derivatives of sampled arrays (interior 5-point stencil, one-sided ends)
- Composite Gauss-Legendre quadrature with adaptive bisection
"""

import logging
from typing import Callable, Sequence, Tuple

import numpy as np

from heislift.config import (
    FD_BASE_STEP, GAUSS_LEGENDRE_NODES, QUADRATURE_REL_TOL,
    QUADRATURE_ABS_TOL, QUADRATURE_MAX_DEPTH
)
from heislift.errors import NonFiniteDerivative, QuadratureNonConvergence

logger = logging.getLogger(__name__)

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(GAUSS_LEGENDRE_NODES)

# (f(x-2h), f(x-h), f(x+h), f(x+2h)) weights over 12h
_CENTRAL_WEIGHTS = (1.0, -8.0, 8.0, -1.0)
_CENTRAL_OFFSETS = (-2.0, -1.0, 1.0, 2.0)


def fd_step(point: Sequence[float]) -> float:
    """
    Step size for central differences at a point.

    Parameters:
        point (sequence): Coordinates of the evaluation point

    Returns:
        float: max(1, |point|) * eps^(1/5)
    """
    return max(1.0, float(np.linalg.norm(np.asarray(point, dtype=float)))) * FD_BASE_STEP


def central_difference(func: Callable[[np.ndarray], complex], point: Sequence[float],
                       direction: Sequence[float], step: float = None) -> complex:
    """
    Directional derivative of func at point along direction, fourth-order accurate.

    Parameters:
        func (callable): Function of a real coordinate array, real or complex valued
        point (sequence): Base point
        direction (sequence): Direction vector (not normalized)
        step (float, optional): Step size; defaults to fd_step(point)

    Returns:
        complex: The difference quotient

    Raises:
        NonFiniteDerivative: If func is not finite on the stencil or the quotient overflows
    """
    base = np.asarray(point, dtype=float)
    vec = np.asarray(direction, dtype=float)
    h = fd_step(base) if step is None else step

    total = 0.0
    for weight, offset in zip(_CENTRAL_WEIGHTS, _CENTRAL_OFFSETS):
        value = func(base + offset * h * vec)
        if not np.all(np.isfinite(value)):
            raise NonFiniteDerivative(f"function not finite at stencil offset {offset} around {base}")
        total = total + weight * value

    result = total / (12.0 * h)
    if not np.all(np.isfinite(result)):
        raise NonFiniteDerivative(f"difference quotient overflowed at {base}")
    return result


def gradient(func: Callable[[np.ndarray], complex], point: Sequence[float],
             step: float = None) -> np.ndarray:
    """Coordinate gradient of func at point by central differences."""
    base = np.asarray(point, dtype=float)
    h = fd_step(base) if step is None else step
    partials = []
    for axis in range(base.size):
        unit = np.zeros(base.size)
        unit[axis] = 1.0
        partials.append(central_difference(func, base, unit, h))
    return np.asarray(partials)


def wirtinger(func: Callable[[complex], complex], zeta: complex,
              step: float = None) -> Tuple[complex, complex]:
    """
    Wirtinger derivatives (f_zeta, f_zetabar) of a function of one complex variable.

    Parameters:
        func (callable): Function of a complex argument
        zeta (complex): Evaluation point
        step (float, optional): Step size; defaults to fd_step(zeta)

    Returns:
        tuple: (f_zeta, f_zetabar)
    """
    def as_real(coords):
        return func(complex(coords[0], coords[1]))

    f_xi, f_eta = gradient(as_real, (zeta.real, zeta.imag), step)
    return 0.5 * (f_xi - 1j * f_eta), 0.5 * (f_xi + 1j * f_eta)


def sample_derivative(values: np.ndarray, params: np.ndarray) -> np.ndarray:
    """
    Derivative of sampled values with respect to their parameters.

    Uniform grids with at least five nodes use the 5-point central stencil in the
    interior and fourth-order one-sided stencils at the two nodes nearest each end.
    Shorter or non-uniform grids fall back to numpy.gradient (second order).

    Parameters:
        values (ndarray): Sampled values, real or complex
        params (ndarray): Strictly increasing parameters

    Returns:
        ndarray: Derivative at each node
    """
    values = np.asarray(values)
    params = np.asarray(params, dtype=float)
    n = values.shape[0]
    spacing = np.diff(params)

    if n < 5 or not np.allclose(spacing, spacing[0], rtol=1e-9, atol=0.0):
        return np.gradient(values, params, edge_order=2)

    h = spacing[0]
    out = np.empty_like(values, dtype=np.result_type(values, float))
    out[2:-2] = (values[:-4] - 8.0 * values[1:-3] + 8.0 * values[3:-1] - values[4:]) / (12.0 * h)

    # one-sided at the ends
    out[0] = (-25.0 * values[0] + 48.0 * values[1] - 36.0 * values[2]
              + 16.0 * values[3] - 3.0 * values[4]) / (12.0 * h)
    out[1] = (-3.0 * values[0] - 10.0 * values[1] + 18.0 * values[2]
              - 6.0 * values[3] + values[4]) / (12.0 * h)
    out[-1] = (25.0 * values[-1] - 48.0 * values[-2] + 36.0 * values[-3]
               - 16.0 * values[-4] + 3.0 * values[-5]) / (12.0 * h)
    out[-2] = (3.0 * values[-1] + 10.0 * values[-2] - 18.0 * values[-3]
               + 6.0 * values[-4] - values[-5]) / (12.0 * h)
    return out


def gauss_legendre_panel(func: Callable[[np.ndarray], np.ndarray], a: float, b: float) -> complex:
    """
    Five-point Gauss-Legendre rule on [a, b].

    func must accept an array of nodes and return an array of the same shape.
    """
    half = 0.5 * (b - a)
    nodes = 0.5 * (b + a) + half * _GL_NODES
    values = np.asarray(func(nodes))
    return half * np.dot(_GL_WEIGHTS, values)


def adaptive_quad(func: Callable[[np.ndarray], np.ndarray], a: float, b: float,
                  rel_tol: float = QUADRATURE_REL_TOL, abs_tol: float = QUADRATURE_ABS_TOL,
                  max_depth: int = QUADRATURE_MAX_DEPTH) -> complex:
    """
    Integrate func over [a, b] by Gauss-Legendre panels with adaptive bisection.

    A panel is accepted when its two halves agree with the whole panel to
    max(abs_tol, rel_tol * |halves|).

    Parameters:
        func (callable): Vectorized integrand, real or complex valued
        a (float): Lower limit
        b (float): Upper limit
        rel_tol (float): Relative acceptance tolerance
        abs_tol (float): Absolute acceptance tolerance
        max_depth (int): Maximum bisection depth

    Returns:
        complex: The integral (real integrands return a real value)

    Raises:
        QuadratureNonConvergence: If a panel still disagrees at max_depth
    """
    if a == b:
        return 0.0

    stats = {'panels': 0, 'depth': 0}

    def refine(lo, hi, whole, depth):
        mid = 0.5 * (lo + hi)
        left = gauss_legendre_panel(func, lo, mid)
        right = gauss_legendre_panel(func, mid, hi)
        stats['panels'] += 2
        stats['depth'] = max(stats['depth'], depth)
        refined = left + right
        if not np.isfinite(refined):
            raise QuadratureNonConvergence(f"integrand not finite on [{lo}, {hi}]")
        if abs(refined - whole) <= max(abs_tol, rel_tol * abs(refined)):
            return refined
        if depth >= max_depth:
            raise QuadratureNonConvergence(
                f"no convergence on [{lo}, {hi}] after {max_depth} bisections"
            )
        return refine(lo, mid, left, depth + 1) + refine(mid, hi, right, depth + 1)

    result = refine(a, b, gauss_legendre_panel(func, a, b), 1)
    logger.debug("quadrature on [%g, %g]: %d panels, depth %d", a, b, stats['panels'], stats['depth'])
    return result


def cumulative_quad(func: Callable[[np.ndarray], np.ndarray], params: np.ndarray, **kwargs) -> np.ndarray:
    """
    Running integrals of func from params[0] to each node.

    Each sample interval is integrated adaptively and the results are summed in order.

    Parameters:
        func (callable): Vectorized integrand
        params (ndarray): Increasing breakpoints
        **kwargs: Passed to adaptive_quad

    Returns:
        ndarray: Integral from params[0] to params[i], for every i
    """
    params = np.asarray(params, dtype=float)
    pieces = [adaptive_quad(func, lo, hi, **kwargs) for lo, hi in zip(params[:-1], params[1:])]
    pieces = np.asarray(pieces)
    return np.concatenate(([0.0 * (pieces[0] if pieces.size else 0.0)], np.cumsum(pieces)))


def composite_quad(func: Callable[[np.ndarray], np.ndarray], params: np.ndarray, **kwargs) -> complex:
    """Integral of func over [params[0], params[-1]] as a sum over sample intervals."""
    return cumulative_quad(func, params, **kwargs)[-1]
