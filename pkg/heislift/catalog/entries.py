#!/usr/bin/env python3
"""
Closed-form example maps.

Every entry carries a planar map (where one exists) together with whatever is
known in closed form about it: the potential psi, the lifted map and the
Beltrami coefficient. These closed forms are the oracles for the numeric lifts.
"""

import cmath
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional

import numpy as np

from heislift.analysis.maps import FunctionMap, Partials, StarMap, identity_map
from heislift.config import CATALOG_DETERMINANT_TOL, DEFAULT_BASEPOINT, DEFAULT_PHASE
from heislift.errors import DeterminantViolation, InvalidPoint
from heislift.geometry.groups import left_arg
from heislift.geometry.isometries import left_translation, rotation, conjugation, dilation, inversion
from heislift.geometry.matrix_model import SU11Element, su11_action
from heislift.geometry.points import HeisPoint
from heislift.lifting.lift import bundle_partials, lift_heis, lift_star
from heislift.lifting.planar import PlanarMap
from heislift.models.reports import CatalogDescriptor


@dataclass(frozen=True)
class CatalogEntry:
    """
    A catalog map with its closed-form oracles.

    kind is 'star' for maps of L (lifted to H*) and 'heis' for maps of C or H.
    """
    name: str
    kind: str
    params: Dict[str, float] = field(default_factory=dict)
    planar: Optional[PlanarMap] = None
    closed_form_psi: Optional[Callable[[complex], float]] = None
    closed_form_lift: Optional[StarMap] = None
    expected_mu: Optional[Callable[[complex], complex]] = None
    description: str = ""

    @property
    def spec(self) -> Dict[str, Any]:
        """Specification that resolves back to this entry (composites keep their parts)."""
        if self.planar is not None:
            return dict(self.planar.spec)
        return {'name': self.name, **self.params}

    def lift(self, basepoint: complex = None, phase: float = DEFAULT_PHASE,
             force: bool = False, **kwargs) -> StarMap:
        """
        Numeric lift of the planar map.

        Raises:
            ValueError: If the entry has no planar map
            NotSymplectic: If the symplectic gate fails and force is not set
        """
        if self.planar is None:
            raise ValueError(f"catalog entry {self.name!r} has no planar map to lift")
        if self.kind == 'star':
            return lift_star(self.planar, DEFAULT_BASEPOINT if basepoint is None else basepoint,
                             phase, force=force, **kwargs)
        return lift_heis(self.planar, force=force, basepoint=0j if basepoint is None else basepoint, **kwargs)

    def analysis_map(self) -> StarMap:
        """The closed-form lift when known, otherwise the numeric lift."""
        if self.closed_form_lift is not None:
            return self.closed_form_lift
        return self.lift()

    def descriptor(self) -> CatalogDescriptor:
        return CatalogDescriptor(
            name=self.name, kind=self.kind, params=dict(self.params),
            closed_form_psi=self.closed_form_psi is not None,
            closed_form_lift=self.closed_form_lift is not None,
            expected_mu=self.expected_mu is not None,
            description=self.description,
        )


def _theta_derivs(zeta: complex):
    """Wirtinger derivatives of arg(zeta): (1/(2 i zeta), i/(2 zetabar))."""
    return 1.0 / (2j * zeta), 1j / (2.0 * zeta.conjugate())


def _imag_derivative(f_z: complex, f_zbar: complex) -> complex:
    return (f_z - f_zbar.conjugate()) / 2j


def make_identity() -> CatalogEntry:
    planar = PlanarMap(lambda zeta: zeta, lambda zeta: (1.0 + 0j, 0j), domain='L',
                       name='identity', spec={'name': 'identity'})
    return CatalogEntry(
        name='identity', kind='star', planar=planar,
        closed_form_psi=lambda zeta: 0.0,
        closed_form_lift=identity_map('star'),
        expected_mu=lambda zeta: 0j,
        description="Identity of L and of H*",
    )


def make_su11(a: float, b: float, c: float, d: float, theta: float = 0.0) -> CatalogEntry:
    """
    Isometry zeta -> (a zeta + i b)/(i c zeta + d) of L with a d + b c = 1.

    The numeric lift normalized at -1 equals the SU(1,1) action with phase
    theta + Arg(d - i c); psi is -Arg(i c zeta + d) + Arg(d - i c).

    Raises:
        DeterminantViolation: If |a d + b c - 1| > 1e-10
    """
    det = a * d + b * c
    if abs(det - 1.0) > CATALOG_DETERMINANT_TOL:
        raise DeterminantViolation(f"ad + bc = {det!r}, expected 1")
    scale = 1.0 / math.sqrt(det)
    g = SU11Element(a * scale, b * scale, c * scale, d * scale, theta)
    params = {'a': a, 'b': b, 'c': c, 'd': d, 'theta': theta}
    base_phase = cmath.phase(g.denominator(DEFAULT_BASEPOINT))

    def derivs(zeta):
        return 1.0 / g.denominator(zeta) ** 2, 0j

    def jacobian_deriv(zeta):
        # J_f = |D|^-4 with D = i c zeta + d
        D = g.denominator(zeta)
        return -2j * g.c / (D * abs(D) ** 4)

    planar = PlanarMap(g.mobius, derivs, domain='L', name='su11', spec={'name': 'su11', **params},
                       jacobian_deriv=jacobian_deriv)

    def psi(zeta):
        return -cmath.phase(g.denominator(zeta)) + base_phase

    def lift_partials(p):
        zeta = complex(-p.modulus_sq, p.t)
        D = g.denominator(zeta)
        A = cmath.exp(1j * g.theta) / D
        v_zeta = _imag_derivative(1.0 / D ** 2, 0j)
        return bundle_partials(p.z, A, -1j * g.c * A / D, 0j, g.mobius(zeta).imag, v_zeta)

    action = FunctionMap(
        lambda p: su11_action(g, p).z, lambda p: su11_action(g, p).t,
        kind='star', partials=lift_partials, name='su11',
    )
    return CatalogEntry(
        name='su11', kind='star', params=params, planar=planar,
        closed_form_psi=psi, closed_form_lift=action, expected_mu=lambda zeta: 0j,
        description="SU(1,1) x U(1) isometry of L and its conformal lift",
    )


def make_twist(k: float = 1.0, c: float = 0.0, g: Callable[[float], float] = None,
               g_prime: Callable[[float], float] = None) -> CatalogEntry:
    """
    Twist zeta -> zeta e^{g(theta)}, theta = arg zeta in (pi/2, 3pi/2); g(theta) = k theta by default.

    J_f = e^{2g}, mu_f = (i g'/(2 - i g')) zeta/zetabar and psi' = (1/2) g' tan(theta);
    for g = k theta, psi = -(k/2) ln(-cos theta).
    """
    linear = g is None
    if linear:
        def g(theta):
            return k * theta

        def g_prime(theta):
            return k
    elif g_prime is None:
        raise ValueError("a custom twist needs g_prime")

    params = {'k': k, 'c': c} if linear else {'c': c}

    def func(zeta):
        return zeta * math.exp(g(float(left_arg(zeta))))

    def derivs(zeta):
        theta = float(left_arg(zeta))
        e = math.exp(g(theta))
        gp = g_prime(theta)
        return e * (1.0 - 0.5j * gp), e * 0.5j * gp * zeta / zeta.conjugate()

    def jacobian_deriv(zeta):
        # J_f = e^{2g(theta)}, theta_zeta = 1/(2 i zeta)
        theta = float(left_arg(zeta))
        return -1j * g_prime(theta) * math.exp(2.0 * g(theta)) / zeta

    planar = PlanarMap(func, derivs, domain='L', name='twist', spec={'name': 'twist', **params},
                       jacobian_deriv=jacobian_deriv)

    def mu(zeta):
        gp = g_prime(float(left_arg(zeta)))
        return 1j * gp / (2.0 - 1j * gp) * zeta / zeta.conjugate()

    psi = None
    if linear:
        def psi(zeta):
            return -0.5 * k * math.log(-math.cos(float(left_arg(zeta))))

    def amplitude(zeta):
        return math.exp(0.5 * g(float(left_arg(zeta)))) * cmath.exp(1j * (psi(zeta) + c))

    def lift_partials(p):
        zeta = complex(-p.modulus_sq, p.t)
        theta = float(left_arg(zeta))
        gp = g_prime(theta)
        psi_theta = 0.5 * gp * math.tan(theta)
        A = amplitude(zeta)
        rate = 0.5 * gp + 1j * psi_theta
        th_z, th_zbar = _theta_derivs(zeta)
        f_z, f_zbar = derivs(zeta)
        return bundle_partials(p.z, A, A * rate * th_z, A * rate * th_zbar,
                               func(zeta).imag, _imag_derivative(f_z, f_zbar))

    closed = None
    if linear:
        closed = FunctionMap(
            lambda p: p.z * amplitude(complex(-p.modulus_sq, p.t)),
            lambda p: func(complex(-p.modulus_sq, p.t)).imag,
            kind='star', partials=lift_partials, name='twist',
        )
    return CatalogEntry(
        name='twist', kind='star', params=params, planar=planar,
        closed_form_psi=psi, closed_form_lift=closed, expected_mu=mu,
        description="Twist of L; maps every Heisenberg cylinder t = a|z|^2 to itself",
    )


def make_twist_naive(k: float = 1.0, c: float = 0.0) -> CatalogEntry:
    """The twist lift with a constant phase only: (z e^{k theta/2 + i c}, t e^{k theta}); not contact when k != 0."""
    params = {'k': k, 'c': c}

    def f_I(p):
        theta = float(left_arg(complex(-p.modulus_sq, p.t)))
        return p.z * cmath.exp(0.5 * k * theta + 1j * c)

    def f_3(p):
        theta = float(left_arg(complex(-p.modulus_sq, p.t)))
        return p.t * math.exp(k * theta)

    return CatalogEntry(
        name='twist_naive', kind='star', params=params,
        closed_form_lift=FunctionMap(f_I, f_3, kind='star', name='twist_naive'),
        description="Negative control: twist lift without the potential",
    )


def make_spiral_stretch(k: float = 0.0, kp: float = 0.0, c: float = 0.0) -> CatalogEntry:
    """
    Spiral-stretch zeta -> |zeta|^{k+1} e^{i Theta}, tan(Theta) = tan(theta)/(k+1) + k'.

    Theta is taken in (pi/2, 3pi/2) as the argument of w = (k+1) xi + i(eta + k'(k+1) xi),
    so that w = P zeta + Q zetabar with P, Q = ((k+1)(1 + i k') +- 1)/2.
    psi = (k'(k+1)/2) ln|zeta| + (Theta - theta)/2, normalized to vanish at -1.

    Raises:
        InvalidPoint: If k < 0
    """
    if k < 0.0:
        raise InvalidPoint(f"spiral-stretch exponent k must be >= 0, got {k}")
    params = {'k': k, 'kp': kp, 'c': c}
    m = (k + 1.0) * complex(1.0, kp)
    P, Q = 0.5 * (m + 1.0), 0.5 * (m - 1.0)
    power = k + 1.0

    def w_of(zeta):
        return P * zeta + Q * zeta.conjugate()

    def func(zeta):
        w = w_of(zeta)
        return abs(zeta) ** power * w / abs(w)

    def log_derivs(zeta):
        w = w_of(zeta)
        wbar = w.conjugate()
        d_z = power / (2.0 * zeta) + 0.5 * (P / w - Q.conjugate() / wbar)
        d_zbar = power / (2.0 * zeta.conjugate()) + 0.5 * (Q / w - P.conjugate() / wbar)
        return d_z, d_zbar

    def derivs(zeta):
        value = func(zeta)
        d_z, d_zbar = log_derivs(zeta)
        return value * d_z, value * d_zbar

    planar = PlanarMap(func, derivs, domain='L', name='spiral_stretch',
                       spec={'name': 'spiral_stretch', **params})

    def angle_gap(zeta):
        return float(left_arg(w_of(zeta))) - float(left_arg(zeta))

    gap_at_base = angle_gap(DEFAULT_BASEPOINT)

    def psi(zeta):
        return 0.5 * kp * power * math.log(abs(zeta)) + 0.5 * (angle_gap(zeta) - gap_at_base)

    def mu(zeta):
        d_z, d_zbar = log_derivs(zeta)
        return d_zbar / d_z

    def f_I(p):
        zeta = complex(-p.modulus_sq, p.t)
        return p.z * planar.jacobian(zeta) ** 0.25 * cmath.exp(1j * (psi(zeta) + c))

    closed = FunctionMap(f_I, lambda p: func(complex(-p.modulus_sq, p.t)).imag,
                         kind='star', name='spiral_stretch')
    return CatalogEntry(
        name='spiral_stretch', kind='star', params=params, planar=planar,
        closed_form_psi=psi, closed_form_lift=closed, expected_mu=mu,
        description="Spiral-stretch of L (k = 0: Heisenberg spiral, k' = 0: stretch)",
    )


def make_plain_stretch() -> CatalogEntry:
    """zeta -> zeta |zeta|; maps L to L but is not symplectic."""
    def derivs(zeta):
        r = abs(zeta)
        return 1.5 * r + 0j, 0.5 * zeta * zeta / r

    planar = PlanarMap(lambda zeta: zeta * abs(zeta), derivs, domain='L',
                       name='plainstretch', spec={'name': 'plainstretch'})
    return CatalogEntry(
        name='plainstretch', kind='star', planar=planar,
        description="Negative control: radial stretch, not symplectic",
    )


# --- maps of H ------------------------------------------------------------------

def _heis_map(name: str, func: Callable[[HeisPoint], HeisPoint],
              partials: Optional[Callable[[HeisPoint], Partials]] = None) -> FunctionMap:
    return FunctionMap(lambda p: func(p).z, lambda p: func(p).t, kind='heis', partials=partials, name=name)


def make_heis_isometry(kind: str, w_re: float = 0.0, w_im: float = 0.0, s: float = 0.0,
                       theta: float = 0.0, delta: float = 1.0) -> CatalogEntry:
    """
    Heisenberg similarities: translation(w, s), rotation(theta), conjugation,
    dilation(delta) and inversion.

    Translations and rotations come with their planar maps z + w and e^{i theta} z,
    whose lifts to H are L_(w, 0) and R_theta.

    Raises:
        InvalidPoint: If delta <= 0 for a dilation
        ValueError: For an unknown kind
    """
    if kind == 'translation':
        w = complex(w_re, w_im)
        params = {'w_re': w_re, 'w_im': w_im, 's': s}

        def exact(p):
            image = left_translation(w, s, p)
            return Partials(f=image.z, f3=image.t, f_z=1.0 + 0j, f_zbar=0j, f_t=0j,
                            f3_z=1j * w.conjugate(), f3_t=1.0)

        planar = PlanarMap(lambda z: z + w, lambda z: (1.0 + 0j, 0j), domain='C',
                           name='heis_translation', spec={'name': 'heis_translation', **params})
        return CatalogEntry(
            name='heis_translation', kind='heis', params=params, planar=planar,
            closed_form_psi=lambda z: -2.0 * (w.conjugate() * z).imag,
            closed_form_lift=_heis_map('heis_translation', lambda p: left_translation(w, s, p), exact),
            expected_mu=lambda z: 0j,
            description="Left translation L_(w,s) of H",
        )

    if kind == 'rotation':
        u = cmath.exp(1j * theta)
        params = {'theta': theta}

        def exact(p):
            return Partials(f=u * p.z, f3=p.t, f_z=u, f_zbar=0j, f_t=0j, f3_z=0j, f3_t=1.0)

        planar = PlanarMap(lambda z: u * z, lambda z: (u, 0j), domain='C',
                           name='heis_rotation', spec={'name': 'heis_rotation', **params})
        return CatalogEntry(
            name='heis_rotation', kind='heis', params=params, planar=planar,
            closed_form_psi=lambda z: 0.0,
            closed_form_lift=_heis_map('heis_rotation', lambda p: rotation(theta, p), exact),
            expected_mu=lambda z: 0j,
            description="Rotation R_theta of H",
        )

    if kind == 'conjugation':
        def exact(p):
            return Partials(f=p.z.conjugate(), f3=-p.t, f_z=0j, f_zbar=1.0 + 0j, f_t=0j, f3_z=0j, f3_t=-1.0)

        return CatalogEntry(
            name='heis_conjugation', kind='heis',
            closed_form_lift=_heis_map('heis_conjugation', conjugation, exact),
            description="Conjugation j(z, t) = (zbar, -t); reverses orientation",
        )

    if kind == 'dilation':
        if delta <= 0.0:
            raise InvalidPoint(f"dilation factor must be positive, got {delta}")
        params = {'delta': delta}

        def exact(p):
            return Partials(f=delta * p.z, f3=delta * delta * p.t, f_z=delta + 0j, f_zbar=0j, f_t=0j,
                            f3_z=0j, f3_t=delta * delta)

        return CatalogEntry(
            name='heis_dilation', kind='heis', params=params,
            closed_form_lift=_heis_map('heis_dilation', lambda p: dilation(delta, p), exact),
            description="Dilation D_delta(z, t) = (delta z, delta^2 t)",
        )

    if kind == 'inversion':
        return CatalogEntry(
            name='heis_inversion', kind='heis',
            closed_form_lift=_heis_map('heis_inversion', inversion),
            description="Koranyi inversion; undefined at the origin",
        )

    raise ValueError(f"unknown Heisenberg similarity {kind!r}")


def make_heis_affine(a_re: float = 1.0, a_im: float = 0.0, b_re: float = 0.0, b_im: float = 0.0,
                     c_re: float = 0.0, c_im: float = 0.0) -> CatalogEntry:
    """
    Affine map z -> a z + b zbar + c of C with |a|^2 - |b|^2 = 1; mu_f = b/a.

    Raises:
        DeterminantViolation: If | |a|^2 - |b|^2 - 1 | > 1e-10
    """
    a, b, c = complex(a_re, a_im), complex(b_re, b_im), complex(c_re, c_im)
    det = abs(a) ** 2 - abs(b) ** 2
    if abs(det - 1.0) > CATALOG_DETERMINANT_TOL:
        raise DeterminantViolation(f"|a|^2 - |b|^2 = {det!r}, expected 1")
    params = {'a_re': a_re, 'a_im': a_im, 'b_re': b_re, 'b_im': b_im, 'c_re': c_re, 'c_im': c_im}
    planar = PlanarMap(lambda z: a * z + b * z.conjugate() + c, lambda z: (a, b), domain='C',
                       name='heis_affine', spec={'name': 'heis_affine', **params})
    return CatalogEntry(
        name='heis_affine', kind='heis', params=params, planar=planar,
        expected_mu=lambda z: b / a,
        description="Affine area-preserving map of the plane",
    )


# --- negative controls -------------------------------------------------------------

def make_noncontact_shear() -> CatalogEntry:
    """(z e^t, t): F*omega* has a horizontal component i(e^{-2t} - 1)/2 on Z*."""
    def exact(p):
        e = math.exp(p.t)
        return Partials(f=p.z * e, f3=p.t, f_z=e + 0j, f_zbar=0j, f_t=p.z * e, f3_z=0j, f3_t=1.0)

    return CatalogEntry(
        name='noncontact_shear', kind='star',
        closed_form_lift=FunctionMap(lambda p: p.z * np.exp(p.t), lambda p: p.t,
                                     kind='star', partials=exact, name='noncontact_shear'),
        description="Negative control: not a contact map",
    )


def make_fibre_shear() -> CatalogEntry:
    """(z, t + x): contact-free shear that moves alpha-fibres."""
    def exact(p):
        return Partials(f=p.z, f3=p.t + p.x, f_z=1.0 + 0j, f_zbar=0j, f_t=0j, f3_z=0.5 + 0j, f3_t=1.0)

    return CatalogEntry(
        name='fibre_shear', kind='star',
        closed_form_lift=FunctionMap(lambda p: p.z, lambda p: p.t + p.x,
                                     kind='star', partials=exact, name='fibre_shear'),
        description="Negative control: does not preserve the circle fibres",
    )
