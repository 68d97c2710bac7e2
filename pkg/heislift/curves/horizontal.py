#!/usr/bin/env python3
"""
Horizontal curves, their lengths, horizontal lifts and holonomy.

This module provides:
- The horizontality defect of curves in H and H*
- Horizontal length in H and H*, hyperbolic length in L
- Horizontal lifts of plane curves to H and of hyperbolic curves to H*
- Holonomy of closed curves against boundary and grid area oracles
"""

import logging

import numpy as np

from heislift.config import (
    HORIZONTAL_TOL, GRID_AREA_COLUMNS, GRID_AREA_POLYGON_NODES, CLOSEDNESS_REL_TOL
)
from heislift.curves.curve import Curve, CurveKind, CurveEvaluator
from heislift.errors import NotHorizontal, NotClosed, LeftHalfPlaneViolation
from heislift.models.reports import HolonomyReport
from heislift.utils.numerics import adaptive_quad, composite_quad, cumulative_quad

logger = logging.getLogger(__name__)


def _require_kind(curve: Curve, *kinds: CurveKind) -> None:
    if curve.kind not in kinds:
        names = ', '.join(k.value for k in kinds)
        raise ValueError(f"expected a {names} curve, got {curve.kind.value}")


def _vertical_rate(z, dz, dt):
    """dt/ds + 2 Im(conj(z) dz/ds)."""
    return dt + 2.0 * np.imag(np.conj(z) * dz)


def horizontality_defect(curve: Curve) -> float:
    """
    Largest violation of the horizontality condition over the nodes.

    On H this is |t' + 2 Im(conj(z) z')|; on H* it is the same quantity divided
    by 2|z|^2, which is the T* component of the velocity.

    Parameters:
        curve (Curve): A heis or star curve

    Returns:
        float: Maximum defect over the nodes
    """
    _require_kind(curve, CurveKind.HEIS, CurveKind.STAR)
    dz, dt = curve.node_velocity()
    rate = _vertical_rate(curve.z, dz, dt)
    if curve.kind is CurveKind.STAR:
        rate = rate / (2.0 * np.abs(curve.z) ** 2)
    return float(np.max(np.abs(rate)))


def _check_horizontal(curve: Curve, tol: float) -> None:
    defect = horizontality_defect(curve)
    if defect > tol:
        raise NotHorizontal(f"horizontality defect {defect:.3g} exceeds {tol:.3g}")


def horizontal_length_heis(curve: Curve, tol: float = HORIZONTAL_TOL) -> float:
    """
    Horizontal length of a curve in H: the Euclidean length of its projection.

    Raises:
        NotHorizontal: If the defect exceeds tol
    """
    _require_kind(curve, CurveKind.HEIS)
    _check_horizontal(curve, tol)
    return float(composite_quad(lambda s: np.abs(curve.evaluator.velocity(s)[0]), curve.params))


def horizontal_length_star(curve: Curve, tol: float = HORIZONTAL_TOL) -> float:
    """
    Horizontal length of a curve in H*: the integral of |z'| / |z|.

    Raises:
        NotHorizontal: If the defect exceeds tol
    """
    _require_kind(curve, CurveKind.STAR)
    _check_horizontal(curve, tol)

    def integrand(s):
        z, _ = curve.evaluator.position(s)
        dz, _ = curve.evaluator.velocity(s)
        return np.abs(dz) / np.abs(z)

    return float(composite_quad(integrand, curve.params))


def hyperbolic_length(curve: Curve) -> float:
    """
    Hyperbolic length of a curve in the left half-plane: the integral of |zeta'| / (-2 Re zeta).

    Raises:
        LeftHalfPlaneViolation: If the curve leaves Re(zeta) < 0
    """
    _require_kind(curve, CurveKind.HYPERBOLIC)

    def integrand(s):
        zeta, _ = curve.evaluator.position(s)
        if np.any(zeta.real >= 0.0):
            raise LeftHalfPlaneViolation("curve leaves the left half-plane between nodes")
        dzeta, _ = curve.evaluator.velocity(s)
        return np.abs(dzeta) / (-2.0 * zeta.real)

    return float(composite_quad(integrand, curve.params))


class _LiftEvaluator(CurveEvaluator):
    """
    Evaluator of a horizontal lift.

    The accumulated quantity (t for H, the angle for H*) is stored at the nodes and
    continued between nodes by quadrature from the nearest node on the left.
    """

    def __init__(self, source: Curve, node_values: np.ndarray):
        self.source = source
        self.node_values = node_values

    def rate(self, s):
        raise NotImplementedError

    def accumulated(self, s):
        s = np.atleast_1d(np.asarray(s, dtype=float))
        params = self.source.params
        index = np.clip(np.searchsorted(params, s, side='right') - 1, 0, params.size - 2)
        out = np.empty(s.shape)
        for i, (k, si) in enumerate(zip(index, s)):
            out[i] = self.node_values[k] + adaptive_quad(self.rate, params[k], si)
        return out


class _HeisLiftEvaluator(_LiftEvaluator):

    def rate(self, s):
        z, _ = self.source.evaluator.position(s)
        dz, _ = self.source.evaluator.velocity(s)
        return -2.0 * np.imag(np.conj(z) * dz)

    def position(self, s):
        z, _ = self.source.evaluator.position(s)
        return z, self.accumulated(s).reshape(np.shape(z))

    def velocity(self, s):
        dz, _ = self.source.evaluator.velocity(s)
        return dz, self.rate(s)


class _StarLiftEvaluator(_LiftEvaluator):

    def rate(self, s):
        zeta, _ = self.source.evaluator.position(s)
        dzeta, _ = self.source.evaluator.velocity(s)
        return dzeta.imag / (2.0 * zeta.real)

    def position(self, s):
        zeta, _ = self.source.evaluator.position(s)
        theta = self.accumulated(s).reshape(np.shape(zeta))
        return np.sqrt(-zeta.real) * np.exp(1j * theta), zeta.imag

    def velocity(self, s):
        zeta, _ = self.source.evaluator.position(s)
        dzeta, _ = self.source.evaluator.velocity(s)
        theta = self.accumulated(s).reshape(np.shape(zeta))
        rho = np.sqrt(-zeta.real)
        drho = -dzeta.real / (2.0 * rho)
        dtheta = dzeta.imag / (2.0 * zeta.real)
        return (drho + 1j * rho * dtheta) * np.exp(1j * theta), dzeta.imag


def lift_plane_curve_heis(curve: Curve, t0: float = 0.0) -> Curve:
    """
    Horizontal lift of a plane curve to H starting at height t0.

    t(s) = t0 - 2 * integral_a^s Im(conj(z) z') du, so the lift projects to the
    source under (z, t) -> z.

    Parameters:
        curve (Curve): A plane curve
        t0 (float): Initial height

    Returns:
        Curve: The lifted heis curve
    """
    _require_kind(curve, CurveKind.PLANE)
    lift = _HeisLiftEvaluator(curve, None)
    t_nodes = t0 + cumulative_quad(lift.rate, curve.params)
    lift.node_values = t_nodes
    return Curve(CurveKind.HEIS, curve.params, curve.z, t_nodes, lift)


def lift_hyperbolic_curve(curve: Curve, theta0: float = 0.0) -> Curve:
    """
    Horizontal lift of a curve in the left half-plane to H*.

    gamma(s) = (sqrt(-xi(s)) e^(i theta(s)), eta(s)) with
    theta(s) - theta0 = integral_a^s eta'(u) / (2 xi(u)) du, so alpha o gamma
    reproduces the source.

    Parameters:
        curve (Curve): A hyperbolic curve
        theta0 (float): Initial angle

    Returns:
        Curve: The lifted star curve
    """
    _require_kind(curve, CurveKind.HYPERBOLIC)
    lift = _StarLiftEvaluator(curve, None)
    theta = theta0 + cumulative_quad(lift.rate, curve.params)
    lift.node_values = theta
    z = np.sqrt(-curve.z.real) * np.exp(1j * theta)
    return Curve(CurveKind.STAR, curve.params, z, curve.z.imag, lift)


def _polygon(curve: Curve, nodes: int) -> np.ndarray:
    a, b = curve.interval
    z, _ = curve.evaluator.position(np.linspace(a, b, nodes))
    return np.asarray(z)


def grid_area(curve: Curve, weight=None, columns: int = GRID_AREA_COLUMNS,
              polygon_nodes: int = GRID_AREA_POLYGON_NODES) -> float:
    """
    Signed area enclosed by a closed planar curve, by columns.

    The curve is replaced by a fine polygon. Each column at x = x_c contributes the
    exact winding-weighted chord -sum sign(dx) y over the polygon edges it crosses,
    and columns are combined by the midpoint rule with an optional weight w(x_c).

    Parameters:
        curve (Curve): A closed plane or hyperbolic curve
        weight (callable, optional): Density depending on x only
        columns (int): Number of midpoint columns
        polygon_nodes (int): Number of polygon vertices

    Returns:
        float: The weighted signed area (counterclockwise positive)
    """
    poly = _polygon(curve, polygon_nodes)
    x, y = poly.real, poly.imag
    x_lo, x_hi = float(x.min()), float(x.max())
    if x_hi - x_lo <= 0.0:
        return 0.0

    width = (x_hi - x_lo) / columns
    centers = x_lo + width * (np.arange(columns) + 0.5)
    chords = np.zeros(columns)

    x0, y0 = x, y
    x1, y1 = np.roll(x, -1), np.roll(y, -1)
    for xa, ya, xb, yb in zip(x0, y0, x1, y1):
        if xa == xb:
            continue
        lo, hi = (xa, xb) if xa < xb else (xb, xa)
        start = np.searchsorted(centers, lo, side='left')
        stop = np.searchsorted(centers, hi, side='left')
        if start >= stop:
            continue
        xc = centers[start:stop]
        yc = ya + (xc - xa) * (yb - ya) / (xb - xa)
        chords[start:stop] -= np.sign(xb - xa) * yc

    density = np.ones(columns) if weight is None else weight(centers)
    return float(np.sum(density * chords) * width)


def _hyperbolic_density(xi):
    return 1.0 / (4.0 * xi * xi)


def holonomy_closed(curve: Curve, kind: str) -> HolonomyReport:
    """
    Holonomy of the horizontal lift of a closed curve.

    For kind 'heis' the source is a plane curve and delta = t(b) - t(a) = -4 Area.
    For kind 'star' the source is a hyperbolic curve and delta = theta(b) - theta(a)
    = -2 Area_h. The boundary oracle integrates x dy / 2 - y dx / 2, respectively
    -d(eta) / (4 xi), along the curve; the grid oracle is computed independently by columns.

    Parameters:
        curve (Curve): Closed source curve, counterclockwise for positive area
        kind (str): 'heis' or 'star'

    Returns:
        HolonomyReport: delta, oracle areas and residuals

    Raises:
        NotClosed: If the endpoints differ beyond the closedness tolerance
    """
    kind = CurveKind(kind)
    if not curve.is_closed(CLOSEDNESS_REL_TOL):
        raise NotClosed(f"endpoint gap {curve.endpoint_gap():.3g} is too large for a closed curve")

    ev = curve.evaluator
    if kind is CurveKind.HEIS:
        _require_kind(curve, CurveKind.PLANE)
        lifted = lift_plane_curve_heis(curve, 0.0)
        delta = float(lifted.t[-1] - lifted.t[0])

        def green(s):
            z, _ = ev.position(s)
            dz, _ = ev.velocity(s)
            return 0.5 * np.imag(np.conj(z) * dz)

        area = float(composite_quad(green, curve.params))
        coarse = grid_area(curve)
        factor = 4.0
    else:
        _require_kind(curve, CurveKind.HYPERBOLIC)
        lifted = lift_hyperbolic_curve(curve, 0.0)
        delta = float(lifted.evaluator.node_values[-1] - lifted.evaluator.node_values[0])

        def green(s):
            zeta, _ = ev.position(s)
            dzeta, _ = ev.velocity(s)
            return -dzeta.imag / (4.0 * zeta.real)

        area = float(composite_quad(green, curve.params))
        coarse = grid_area(curve, _hyperbolic_density)
        factor = 2.0

    logger.debug("holonomy %s: delta=%.12g area=%.12g grid=%.12g", kind.value, delta, area, coarse)
    return HolonomyReport(
        kind=kind.value,
        delta=delta,
        area_oracle=area,
        residual=abs(delta + factor * area),
        grid_area=coarse,
        grid_residual=abs(area - coarse),
    )
