#!/usr/bin/env python3
"""
Lifts of symplectic planar maps to contact maps of H* and H.

A symplectic map f of L lifts to
    F(z, t) = (z J_f(zeta)^{1/4} e^{i(psi(zeta) + phase)}, Im f(zeta)),  zeta = -|z|^2 + i t,
a circles-preserving contact map of H* with lambda* = 1 and mu_F = mu_f o alpha.
A map f of C with unit Jacobian lifts to F(z, t) = (f(z), t + phi(z)), a contact
map of H with lambda = 1 that preserves vertical lines.
"""

import cmath
import logging
import math
from typing import Iterable, Optional

from heislift.analysis.maps import StarMap, Partials
from heislift.config import DEFAULT_BASEPOINT, DEFAULT_PHASE, JF_FLOOR
from heislift.errors import OrientationReversed
from heislift.geometry.groups import alpha_value
from heislift.geometry.points import HeisPoint
from heislift.lifting.planar import PlanarMap
from heislift.lifting.potentials import potential_for, symplectic_gate
from heislift.models.reports import LiftedMapDescriptor, pair
from heislift.models.run_config import GridSpec
from heislift.utils.grids import grid_zetas

logger = logging.getLogger(__name__)


def bundle_partials(z: complex, A: complex, A_zeta: complex, A_zetabar: complex,
                    v: float, v_zeta: complex) -> Partials:
    """
    Partials of F = (z A(zeta), v(zeta)) with zeta = -|z|^2 + i t.

    A and v are functions of zeta alone; A_zeta, A_zetabar and v_zeta are their
    Wirtinger derivatives (v is real, so v_zetabar = conj(v_zeta)).
    """
    # d/dz = -zbar (d/dzeta + d/dzetabar), d/dzbar = -z (...), d/dt = i (d/dzeta - d/dzetabar)
    A_sum = A_zeta + A_zetabar
    return Partials(
        f=z * A,
        f3=float(v),
        f_z=A - abs(z) ** 2 * A_sum,
        f_zbar=-z * z * A_sum,
        f_t=1j * z * (A_zeta - A_zetabar),
        f3_z=-2.0 * z.conjugate() * v_zeta.real,
        f3_t=-2.0 * v_zeta.imag,
    )


class LiftedStarMap(StarMap):
    """
    The lift of a symplectic map of L to H*.

    Derivatives are semi-analytic: chain rule through zeta = -|z|^2 + i t with
    f_zeta, f_zetabar from the planar map, psi_zeta from its defining 1-form and
    dJ_f/dzeta by central differences.
    """

    kind = 'star'

    def __init__(self, planar: PlanarMap, basepoint: complex = DEFAULT_BASEPOINT,
                 phase: float = DEFAULT_PHASE, forced: bool = False):
        if planar.domain != 'L':
            raise ValueError("lift_star needs a map of the left half-plane")
        self.planar = planar
        self.potential = potential_for(planar, basepoint)
        self.basepoint = self.potential.basepoint
        self.phase = float(phase)
        self.forced = forced
        self.analytic = planar.analytic

    def _jacobian(self, zeta: complex) -> float:
        J = self.planar.jacobian(zeta)
        if J <= JF_FLOOR:
            raise OrientationReversed(f"J_f = {J:.3g} is not positive at zeta = {zeta}")
        return J

    def psi(self, zeta: complex) -> float:
        return self.potential(zeta) + self.phase

    def amplitude(self, zeta: complex) -> complex:
        """A(zeta) = J_f^{1/4} e^{i psi}, so that f_I = z A."""
        return self._jacobian(zeta) ** 0.25 * complex_exp(self.psi(zeta))

    def value(self, p):
        zeta = complex(alpha_value(p.z, p.t))
        image = self.planar.check_image(zeta)
        return p.z * self.amplitude(zeta), image.imag

    def partials(self, p):
        z = p.z
        zeta = complex(alpha_value(z, p.t))
        J = self._jacobian(zeta)
        A = J ** 0.25 * complex_exp(self.psi(zeta))
        image = self.planar.check_image(zeta)

        J_z = self.planar.jacobian_derivative(zeta)
        g = self.potential.gradient(zeta)
        A_zeta = A * (J_z / (4.0 * J) + 1j * g)
        A_zetabar = A * (J_z.conjugate() / (4.0 * J) + 1j * g.conjugate())

        return bundle_partials(z, A, A_zeta, A_zetabar, image.imag, self.planar.imag_derivative(zeta))

    def expected_mu(self, p: HeisPoint) -> complex:
        """mu_f(alpha(p)), the Beltrami coefficient the lift must carry."""
        return self.planar.mu(complex(alpha_value(p.z, p.t)))

    def potential_at(self, p: HeisPoint) -> float:
        return self.psi(complex(alpha_value(p.z, p.t)))

    def descriptor(self) -> LiftedMapDescriptor:
        return LiftedMapDescriptor(
            kind='star', source=self.planar.spec, basepoint=pair(self.basepoint),
            phase=self.phase, forced=self.forced,
        )

    def __repr__(self):
        return f"LiftedStarMap({self.planar.name!r}, basepoint={self.basepoint}, phase={self.phase})"


class LiftedHeisMap(StarMap):
    """The lift (f(z), t + phi(z)) of a unit-Jacobian map of C to H."""

    kind = 'heis'

    def __init__(self, planar: PlanarMap, basepoint: complex = 0j, forced: bool = False):
        if planar.domain != 'C':
            raise ValueError("lift_heis needs a map of the plane")
        self.planar = planar
        self.potential = potential_for(planar, basepoint)
        self.basepoint = self.potential.basepoint
        self.phase = 0.0
        self.forced = forced
        self.analytic = planar.analytic

    def value(self, p):
        return self.planar(p.z), p.t + self.potential(p.z)

    def partials(self, p):
        f_z, f_zbar = self.planar.derivs(p.z)
        return Partials(
            f=self.planar(p.z),
            f3=p.t + self.potential(p.z),
            f_z=f_z,
            f_zbar=f_zbar,
            f_t=0j,
            f3_z=self.potential.gradient(p.z),
            f3_t=1.0,
        )

    def expected_mu(self, p: HeisPoint) -> complex:
        return self.planar.mu(p.z)

    def potential_at(self, p: HeisPoint) -> float:
        return self.potential(p.z)

    def descriptor(self) -> LiftedMapDescriptor:
        return LiftedMapDescriptor(
            kind='heis', source=self.planar.spec, basepoint=pair(self.basepoint),
            phase=0.0, forced=self.forced,
        )

    def __repr__(self):
        return f"LiftedHeisMap({self.planar.name!r})"


def complex_exp(angle: float) -> complex:
    return cmath.exp(1j * angle)


def _default_planar_points(domain: str, grid: Optional[GridSpec]) -> list:
    if domain == 'L':
        return grid_zetas(grid)
    spec = grid or GridSpec()
    # the plane grid reuses the radii, with a quarter of the angles
    return [r * complex_exp(math.tau * k / spec.angles) for r in spec.radii
            for k in range(0, spec.angles, 4)] + [0j]


def lift_star(f: PlanarMap, basepoint: complex = DEFAULT_BASEPOINT, phase: float = DEFAULT_PHASE,
              force: bool = False, gate_points: Optional[Iterable[complex]] = None,
              grid: Optional[GridSpec] = None, tol: Optional[float] = None) -> LiftedStarMap:
    """
    Lift a symplectic map of L to a contact map of H*.

    Parameters:
        f (PlanarMap): Map of the left half-plane
        basepoint (complex): psi vanishes here
        phase (float): Constant added to psi (rotates f_I)
        force (bool): Skip the symplectic gate; the result is tagged as forced
        gate_points (iterable, optional): Points for the symplectic gate; the
            alpha-image of the grid by default
        grid (GridSpec, optional): Grid used for the default gate points
        tol (float, optional): Gate tolerance

    Returns:
        LiftedStarMap: The lifted map

    Raises:
        NotSymplectic: If the gate fails and force is not set
        LeftHalfPlaneViolation: If f leaves L on the gate points
    """
    if not force:
        points = list(gate_points) if gate_points is not None else _default_planar_points('L', grid)
        symplectic_gate(f, points + [complex(basepoint)], tol)
    else:
        logger.warning("lifting %s without the symplectic gate", f.name)
    return LiftedStarMap(f, basepoint, phase, forced=force)


def lift_heis(f: PlanarMap, force: bool = False, gate_points: Optional[Iterable[complex]] = None,
              grid: Optional[GridSpec] = None, tol: Optional[float] = None,
              basepoint: complex = 0j) -> LiftedHeisMap:
    """
    Lift a map of C with unit Jacobian to a contact map of H.

    Raises:
        NotSymplectic: If |J_f - 1| exceeds the gate tolerance and force is not set
    """
    if not force:
        points = list(gate_points) if gate_points is not None else _default_planar_points('C', grid)
        symplectic_gate(f, points, tol)
    else:
        logger.warning("lifting %s without the symplectic gate", f.name)
    return LiftedHeisMap(f, basepoint, forced=force)
