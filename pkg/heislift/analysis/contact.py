#!/usr/bin/env python3
"""
Pointwise contact and quasiconformal analysis of maps of H* and H.

For maps of H* (kind 'star') everything is expressed in the frame Z*, Zbar*, T*
and through logarithmic derivatives Z*f/f, which never pass through a branched
arg. For maps of H (kind 'heis') the frame Z, Zbar, T and the form omega are used.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

import numpy as np

from heislift.analysis.maps import StarMap, Partials
from heislift.config import (
    ZERO_IMAGE_THRESHOLD, CONTACT_TOL_ANALYTIC, CONTACT_TOL_FD,
    CIRCLES_PRESERVING_TOL, WINDING_QUAD_REL_TOL
)
from heislift.errors import ZeroImage, OrientationReversed, DegenerateMap, NonFiniteDerivative
from heislift.geometry.points import HeisPoint, StarPoint, HypPoint
from heislift.utils.numerics import adaptive_quad

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FrameDerivatives:
    """
    Frame derivatives of F = (f_I, f_3) at a point.

    For kind 'star' the fields hold Z*, Zbar*, T* derivatives; for kind 'heis'
    they hold Z, Zbar, T derivatives.
    """
    kind: str
    z: complex
    f: complex
    f3: float
    Zf: complex
    Zbf: complex
    Tf: complex
    Zf3: complex
    Zbf3: complex
    Tf3: float

    @property
    def log_Z(self) -> complex:
        return self.Zf / self.f

    @property
    def log_Zbar(self) -> complex:
        return self.Zbf / self.f

    @property
    def log_T(self) -> complex:
        return self.Tf / self.f

    def stretches(self) -> Tuple[float, float]:
        """(|Z Log f|, |Zbar Log f|) on H*, (|Zf|, |Zbar f|) on H."""
        if self.kind == 'star':
            return abs(self.log_Z), abs(self.log_Zbar)
        return abs(self.Zf), abs(self.Zbf)

    def reeb_multiplier(self) -> float:
        """F*omega evaluated on the Reeb field: T* on H*, T on H."""
        if self.kind == 'star':
            return self.Tf3 / (2.0 * abs(self.f) ** 2) + self.log_T.imag
        return self.Tf3 + 2.0 * (self.f.conjugate() * self.Tf).imag


@dataclass(frozen=True)
class ContactReport:
    """Contact residuals and distortion data of a map at one point."""
    kind: str
    R1: complex
    R2: complex
    R3_minus_lambda: float
    lambda_star: float
    lambda1: Optional[float] = None
    lambda2: Optional[float] = None
    K: Optional[float] = None
    mu: Optional[complex] = None
    mu_heis: Optional[complex] = None
    mu_ii: Optional[complex] = None
    jacobian: Optional[float] = None
    jacobian_residual: Optional[float] = None

    @property
    def contact_residual(self) -> float:
        return max(abs(self.R1), abs(self.R2))

    def is_contact(self, tol: float) -> bool:
        return self.contact_residual < tol


@dataclass(frozen=True)
class CirclesReport:
    preserving: bool
    max_residual: float
    lambda_stdev: float


def contact_tolerance(F: StarMap) -> float:
    """Default contact tolerance: tighter when F has closed-form derivatives."""
    return CONTACT_TOL_ANALYTIC if F.analytic else CONTACT_TOL_FD


def derivatives_from_partials(kind: str, p: HeisPoint, d: Partials) -> FrameDerivatives:
    """
    Combine Wirtinger partials into frame derivatives.

    Z* = z d/dz + i|z|^2 d/dt, Zbar* = zbar d/dzbar - i|z|^2 d/dt, T* = i(z d/dz - zbar d/dzbar);
    Z = d/dz + i zbar d/dt, Zbar = d/dzbar - i z d/dt, T = d/dt.
    """
    z = p.z
    if kind == 'star':
        r2 = abs(z) ** 2

        def frame(h_z, h_zbar, h_t):
            return (z * h_z + 1j * r2 * h_t,
                    z.conjugate() * h_zbar - 1j * r2 * h_t,
                    1j * (z * h_z - z.conjugate() * h_zbar))
    else:
        def frame(h_z, h_zbar, h_t):
            return (h_z + 1j * z.conjugate() * h_t,
                    h_zbar - 1j * z * h_t,
                    h_t)

    Zf, Zbf, Tf = frame(d.f_z, d.f_zbar, d.f_t)
    Zf3, Zbf3, Tf3 = frame(d.f3_z, d.f3_zbar, d.f3_t)
    return FrameDerivatives(
        kind=kind, z=z, f=d.f, f3=d.f3,
        Zf=Zf, Zbf=Zbf, Tf=Tf, Zf3=Zf3, Zbf3=Zbf3, Tf3=float(np.real(Tf3)),
    )


def frame_derivatives(F: StarMap, p: HeisPoint) -> FrameDerivatives:
    """
    Frame derivatives of F at p.

    Parameters:
        F (StarMap): The map
        p (HeisPoint): Evaluation point (a StarPoint for maps of H*)

    Returns:
        FrameDerivatives: Derivatives of f_I and f_3 along the frame

    Raises:
        ZeroImage: If F is a map of H* and |f_I(p)| < 1e-150
        NonFiniteDerivative: If a derivative is not finite
    """
    d = F.partials(p)
    if F.kind == 'star' and abs(d.f) < ZERO_IMAGE_THRESHOLD:
        raise ZeroImage(f"f_I vanishes at {p}")
    out = derivatives_from_partials(F.kind, p, d)
    values = (out.Zf, out.Zbf, out.Tf, out.Zf3, out.Zbf3, out.Tf3)
    if not all(np.isfinite(v) for v in values):
        raise NonFiniteDerivative(f"non-finite frame derivative at {p}")
    return out


def _residuals(d: FrameDerivatives) -> Tuple[complex, complex]:
    if d.kind == 'star':
        scale = 2.0 * abs(d.f) ** 2
        R1 = d.Zf3 / scale + (d.log_Z - d.log_Zbar.conjugate()) / 2j
        R2 = d.Zbf3 / scale + (d.log_Zbar - d.log_Z.conjugate()) / 2j
    else:
        fbar = d.f.conjugate()
        R1 = fbar * d.Zf - d.f * d.Zbf.conjugate() + 1j * d.Zf3
        R2 = fbar * d.Zbf - d.f * d.Zf.conjugate() + 1j * d.Zbf3
    return R1, R2


def _lambda_value(d: FrameDerivatives) -> float:
    a, b = d.stretches()
    return a * a - b * b


def contact_residuals(F: StarMap, p: HeisPoint, derivs: FrameDerivatives = None) -> ContactReport:
    """
    Contact residuals of F at p.

    R1 and R2 are F*omega* (F*omega on H) evaluated on the horizontal frame
    fields; R3_minus_lambda compares the Reeb-field multiplier with the
    frame formula |Z Log f|^2 - |Zbar Log f|^2 (|Zf|^2 - |Zbar f|^2 on H).

    Parameters:
        F (StarMap): The map
        p (HeisPoint): Evaluation point
        derivs (FrameDerivatives, optional): Precomputed frame derivatives

    Returns:
        ContactReport: Residual fields only
    """
    d = derivs or frame_derivatives(F, p)
    R1, R2 = _residuals(d)
    lam = _lambda_value(d)
    return ContactReport(
        kind=d.kind, R1=complex(R1), R2=complex(R2),
        R3_minus_lambda=float(d.reeb_multiplier() - lam), lambda_star=float(lam),
    )


def lambda_star(F: StarMap, p: HeisPoint, derivs: FrameDerivatives = None) -> float:
    """
    Contact multiplier of F at p (lambda* on H*, lambda on H).

    Raises:
        OrientationReversed: If the multiplier is not positive
    """
    d = derivs or frame_derivatives(F, p)
    value = _lambda_value(d)
    if value <= 0.0:
        raise OrientationReversed(f"contact multiplier {value:.6g} <= 0 at {p}")
    return float(value)


def distortion(F: StarMap, p: HeisPoint, derivs: FrameDerivatives = None) -> Tuple[float, float, float]:
    """
    Horizontal stretches and maximal distortion of F at p.

    Returns:
        tuple: (lambda1, lambda2, K) with K = lambda1 / lambda2

    Raises:
        DegenerateMap: If lambda2 <= 0
    """
    d = derivs or frame_derivatives(F, p)
    a, b = d.stretches()
    lambda1, lambda2 = a + b, a - b
    if lambda2 <= 0.0:
        raise DegenerateMap(f"smallest stretch {lambda2:.6g} <= 0 at {p}; map is not quasiconformal there")
    return float(lambda1), float(lambda2), float(lambda1 / lambda2)


def beltrami(F: StarMap, p: HeisPoint, derivs: FrameDerivatives = None) -> complex:
    """
    Beltrami coefficient Zbar f_I / Z f_I in the frame of the map's group.

    Raises:
        DegenerateMap: If Z f_I vanishes
    """
    d = derivs or frame_derivatives(F, p)
    if d.Zf == 0:
        raise DegenerateMap(f"Z f_I vanishes at {p}")
    return complex(d.Zbf / d.Zf)


def heisenberg_beltrami(F: StarMap, p: HeisPoint, partials: Partials = None) -> complex:
    """Beltrami coefficient of F in the Heisenberg frame Z, Zbar."""
    d = derivatives_from_partials('heis', p, partials or F.partials(p))
    if d.Zf == 0:
        raise DegenerateMap(f"Z f_I vanishes at {p}")
    return complex(d.Zbf / d.Zf)


def second_component_beltrami(d: FrameDerivatives) -> Optional[complex]:
    """Zbar* f_II / Z* f_II for f_II = -|f_I|^2 + i f_3; None on H or where Z* f_II = 0."""
    if d.kind != 'star':
        return None
    fbar = d.f.conjugate()
    Z_fII = -(fbar * d.Zf + d.f * d.Zbf.conjugate()) + 1j * d.Zf3
    Zb_fII = -(fbar * d.Zbf + d.f * d.Zf.conjugate()) + 1j * d.Zbf3
    if Z_fII == 0:
        return None
    return complex(Zb_fII / Z_fII)


def jacobian(F: StarMap, p: HeisPoint) -> float:
    """
    Jacobian determinant of F at p by finite differences of its values.

    On H* the determinant is taken in Haar-adapted form,
    det(d(x', y', t')/d(x, y, t)) * |z|^4 / |f_I|^4; on H it is the plain determinant.
    """
    d = F.numeric_partials(p)
    det = float(np.linalg.det(d.coordinate_jacobian()))
    if F.kind == 'star':
        if abs(d.f) < ZERO_IMAGE_THRESHOLD:
            raise ZeroImage(f"f_I vanishes at {p}")
        det *= (abs(p.z) / abs(d.f)) ** 4
    return det


def analyse_point(F: StarMap, p: HeisPoint, with_jacobian: bool = True) -> ContactReport:
    """
    Full pointwise report: residuals, multiplier, stretches, K, mu and the Jacobian check.

    Raises:
        ZeroImage, NonFiniteDerivative: From frame_derivatives
        OrientationReversed: If the multiplier is not positive
        DegenerateMap: If lambda2 <= 0 or Z f_I vanishes
    """
    partials = F.partials(p)
    if F.kind == 'star' and abs(partials.f) < ZERO_IMAGE_THRESHOLD:
        raise ZeroImage(f"f_I vanishes at {p}")
    d = derivatives_from_partials(F.kind, p, partials)
    base = contact_residuals(F, p, d)

    lam = lambda_star(F, p, d)
    lambda1, lambda2, K = distortion(F, p, d)
    mu = beltrami(F, p, d)
    mu_heis = heisenberg_beltrami(F, p, partials) if F.kind == 'star' else None

    J = J_res = None
    if with_jacobian:
        J = jacobian(F, p)
        J_res = abs(J - lam * lam) / (lam * lam)

    return ContactReport(
        kind=F.kind, R1=base.R1, R2=base.R2, R3_minus_lambda=base.R3_minus_lambda,
        lambda_star=lam, lambda1=lambda1, lambda2=lambda2, K=K, mu=mu, mu_heis=mu_heis,
        mu_ii=second_component_beltrami(d), jacobian=J, jacobian_residual=J_res,
    )


def fibre_residual(F: StarMap, p: HeisPoint, derivs: FrameDerivatives = None) -> float:
    """
    |T* f_II| on H* (f_II constant along alpha-fibres), |T f_I| on H (vertical lines kept).
    """
    d = derivs or frame_derivatives(F, p)
    if d.kind == 'star':
        T_fII = -2.0 * (d.f.conjugate() * d.Tf).real + 1j * d.Tf3
        return float(abs(T_fII))
    return float(abs(d.Tf))


def circles_preserving_check(F: StarMap, points: Iterable[HeisPoint],
                             tol: float = CIRCLES_PRESERVING_TOL) -> CirclesReport:
    """
    Check that F maps alpha-fibres to alpha-fibres over a set of points.

    Parameters:
        F (StarMap): The map
        points (iterable): Sample points
        tol (float): Acceptance tolerance for both the fibre residual and the
            spread of the contact multiplier

    Returns:
        CirclesReport: Verdict, max fibre residual and standard deviation of the multiplier
    """
    residuals, multipliers = [], []
    for p in points:
        d = frame_derivatives(F, p)
        residuals.append(fibre_residual(F, p, d))
        multipliers.append(d.reeb_multiplier())

    max_residual = float(max(residuals)) if residuals else 0.0
    stdev = float(np.std(multipliers)) if multipliers else 0.0
    preserving = max_residual < tol and stdev < tol
    logger.debug("fibre check over %d points: max residual %.3g, multiplier stdev %.3g",
                 len(residuals), max_residual, stdev)
    return CirclesReport(preserving=preserving, max_residual=max_residual, lambda_stdev=stdev)


def fibre_winding(F: StarMap, zeta: complex) -> float:
    """
    Integral of F*omega* around the alpha-fibre over zeta, divided by 2 pi.

    The fibre is theta -> (sqrt(-Re zeta) e^{i theta}, Im zeta), whose velocity is T*.

    Raises:
        ValueError: If F is not a map of H*
    """
    if F.kind != 'star':
        raise ValueError("fibre winding is defined for maps of H*")
    zeta = HypPoint(complex(zeta)).zeta
    radius = math.sqrt(-zeta.real)
    height = zeta.imag

    def integrand(thetas):
        return np.array([
            frame_derivatives(F, StarPoint(radius * np.exp(1j * theta), height)).reeb_multiplier()
            for theta in np.atleast_1d(thetas)
        ])

    total = adaptive_quad(integrand, 0.0, 2.0 * math.pi, rel_tol=WINDING_QUAD_REL_TOL)
    return float(total) / (2.0 * math.pi)
