#!/usr/bin/env python3
"""
Symplectic checks and potential functions of planar maps.

For a symplectic map f of L the 1-form g dzeta + conj(g) dzetabar with
g = i/(4 Re zeta) + (Im f)_zeta / (2 Re f) is exact; its potential psi drives the
lift to H*. For a map f of C with |f_z|^2 - |f_zbar|^2 = 1 the form
2 Im(zbar dz - conj(f) df) is exact; its potential phi drives the lift to H.
Both potentials are integrated along straight segments, which stay inside the
convex domains.
"""

import logging
import threading
import weakref
from typing import Dict, Iterable, Optional

import numpy as np

from heislift.config import (
    DEFAULT_BASEPOINT, POTENTIAL_PANELS, SYMPLECTIC_TOL_ANALYTIC, SYMPLECTIC_TOL_FD,
    QUADRATURE_REL_TOL_FD, QUADRATURE_ABS_TOL_FD
)
from heislift.errors import NotSymplectic
from heislift.geometry.points import HypPoint
from heislift.lifting.planar import PlanarMap
from heislift.utils.numerics import composite_quad, wirtinger

logger = logging.getLogger(__name__)


def symplectic_tolerance(f: PlanarMap) -> float:
    return SYMPLECTIC_TOL_ANALYTIC if f.analytic else SYMPLECTIC_TOL_FD


def symplectic_residual(f: PlanarMap, zeta: complex) -> float:
    """
    |Re^2 f(zeta) - Re^2(zeta) J_f(zeta)| / Re^2(zeta) for a map of L.

    Raises:
        LeftHalfPlaneViolation: If zeta or f(zeta) is not in L
    """
    xi = HypPoint(zeta).xi
    u = f.check_image(zeta).real
    return abs(u * u - xi * xi * f.jacobian(zeta)) / (xi * xi)


def euclidean_symplectic_residual(f: PlanarMap, z: complex) -> float:
    """|J_f(z) - 1| for a map of C."""
    return abs(f.jacobian(z) - 1.0)


def symplectic_gate(f: PlanarMap, points: Iterable[complex], tol: Optional[float] = None) -> float:
    """
    Largest symplectic residual of f over points.

    Parameters:
        f (PlanarMap): Map of L or of C
        points (iterable): Sample points of the domain
        tol (float, optional): Acceptance tolerance; 1e-7 for analytic derivatives, 1e-4 otherwise

    Returns:
        float: The largest residual

    Raises:
        NotSymplectic: If the largest residual exceeds tol
    """
    tol = symplectic_tolerance(f) if tol is None else tol
    residual = symplectic_residual if f.domain == 'L' else euclidean_symplectic_residual
    worst = max((residual(f, zeta) for zeta in points), default=0.0)
    if worst > tol:
        raise NotSymplectic(f"{f.name} is not symplectic: residual {worst:.3g} > {tol:g}")
    logger.debug("symplectic gate for %s passed: residual %.3g", f.name, worst)
    return worst


def psi_gradient(f: PlanarMap, zeta: complex) -> complex:
    """g(zeta) = psi_zeta = i/(4 Re zeta) + (Im f)_zeta / (2 Re f(zeta))."""
    u = f.check_image(zeta).real
    return 1j / (4.0 * zeta.real) + f.imag_derivative(zeta) / (2.0 * u)


def phi_gradient(f: PlanarMap, z: complex) -> complex:
    """phi_z for the form 2 Im(zbar dz - conj(f) df); phi_zbar is its conjugate."""
    value = f(z)
    f_z, f_zbar = f.derivs(z)
    return -1j * (z.conjugate() - value.conjugate() * f_z + value * f_zbar.conjugate())


def closedness_residual(f: PlanarMap, zeta: complex) -> float:
    """
    |d conj(g)/d zeta - dg/d zetabar|, with derivatives of g by central differences.

    Vanishes exactly when f is symplectic at zeta.
    """
    zeta = HypPoint(zeta).zeta
    g_zbar = wirtinger(lambda w: psi_gradient(f, w), zeta)[1]
    return abs(g_zbar.conjugate() - g_zbar)


class Potential:
    """
    Potential of an exact 1-form, normalized to vanish at a basepoint.

    Parameters:
        f (PlanarMap): The map whose form is integrated
        basepoint (complex): Normalization point (in L for maps of L)

    Values are memoized per point; concurrent readers are safe and inserts are
    first-writer-wins.
    """

    def __init__(self, f: PlanarMap, basepoint: complex):
        if f.domain == 'L':
            basepoint = HypPoint(basepoint).zeta
        self.f = f
        self.basepoint = complex(basepoint)
        self._gradient = psi_gradient if f.domain == 'L' else phi_gradient
        self._values: Dict[complex, float] = {}
        self._lock = threading.Lock()
        # finite-difference integrands carry noise near 1e-12
        self._quad_options = {} if f.analytic else {'rel_tol': QUADRATURE_REL_TOL_FD, 'abs_tol': QUADRATURE_ABS_TOL_FD}

    def gradient(self, zeta: complex) -> complex:
        """Holomorphic part of the gradient: psi_zeta (or phi_z)."""
        return self._gradient(self.f, complex(zeta))

    def _integrate(self, zeta: complex) -> float:
        start = self.basepoint
        step = zeta - start

        def integrand(s):
            return np.array([
                2.0 * (self.gradient(start + si * step) * step).real for si in np.atleast_1d(s)
            ])

        return float(composite_quad(integrand, np.linspace(0.0, 1.0, POTENTIAL_PANELS + 1), **self._quad_options))

    def __call__(self, zeta: complex) -> float:
        zeta = complex(zeta)
        if self.f.domain == 'L':
            HypPoint(zeta)
        with self._lock:
            cached = self._values.get(zeta)
        if cached is not None:
            return cached
        if zeta == self.basepoint:
            value = 0.0
        else:
            value = self._integrate(zeta)
        with self._lock:
            return self._values.setdefault(zeta, value)

    def along(self, waypoints: Iterable[complex]) -> float:
        """Integral of the form along the polygon through waypoints (path-independence witness)."""
        points = [complex(w) for w in waypoints]
        total = 0.0
        for a, b in zip(points[:-1], points[1:]):
            step = b - a

            def integrand(s, a=a, step=step):
                return np.array([2.0 * (self.gradient(a + si * step) * step).real for si in np.atleast_1d(s)])

            total += float(composite_quad(integrand, np.linspace(0.0, 1.0, POTENTIAL_PANELS + 1), **self._quad_options))
        return total

    def __len__(self) -> int:
        return len(self._values)


# maps with memoized potentials, held weakly
_CACHED_MAPS: "weakref.WeakSet[PlanarMap]" = weakref.WeakSet()
_POTENTIALS_LOCK = threading.Lock()


def potential_for(f: PlanarMap, basepoint: complex = None) -> Potential:
    """
    The memoized Potential of f normalized at basepoint.

    Parameters:
        f (PlanarMap): Map of L (psi) or of C (phi)
        basepoint (complex, optional): -1 for maps of L, 0 for maps of C
    """
    if basepoint is None:
        basepoint = DEFAULT_BASEPOINT if f.domain == 'L' else 0j
    key = complex(basepoint)
    with _POTENTIALS_LOCK:
        potential = f.potentials.get(key)
        if potential is not None:
            logger.debug("potential cache hit for %s at %s", f.name, basepoint)
            return potential
        potential = Potential(f, basepoint)
        f.potentials[key] = potential
        _CACHED_MAPS.add(f)
        return potential


def clear_potential_cache() -> None:
    with _POTENTIALS_LOCK:
        for f in list(_CACHED_MAPS):
            f.potentials.clear()
        _CACHED_MAPS.clear()


def psi_potential(f: PlanarMap, zeta: complex, basepoint: complex = DEFAULT_BASEPOINT) -> float:
    """
    psi(zeta) for a symplectic map of L, with psi(basepoint) = 0.

    Raises:
        LeftHalfPlaneViolation: If zeta, the basepoint or an image leaves L
        QuadratureNonConvergence: If the segment integral does not converge
    """
    if f.domain != 'L':
        raise ValueError("psi is defined for maps of the left half-plane")
    HypPoint(zeta)
    return potential_for(f, basepoint)(zeta)


def phi_potential(f: PlanarMap, z: complex, basepoint: complex = 0j) -> float:
    """
    phi(z) for a map of C with unit Jacobian, with phi(basepoint) = 0.

    Raises:
        QuadratureNonConvergence: If the segment integral does not converge
    """
    if f.domain != 'C':
        raise ValueError("phi is defined for maps of the plane")
    return potential_for(f, basepoint)(z)
