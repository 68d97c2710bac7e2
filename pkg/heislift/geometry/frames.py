#!/usr/bin/env python3
"""
Left-invariant frames, contact forms and coframes on H and H*.

All fields and forms are written over the coordinates (x, y, t) with z = x + i y.
On H the frame is X = d/dx + 2y d/dt, Y = d/dy - 2x d/dt, T = d/dt. On H* the
distinguished frame is X* = x d/dx + y d/dy, Y* = -y d/dx + x d/dy - 2|z|^2 d/dt,
T* = -y d/dx + x d/dy. The complex fields are Z = (X - iY)/2 and Z* = (X* - iY*)/2 = z Z.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence, Union

import numpy as np

from heislift.errors import NonFiniteDerivative
from heislift.geometry.points import HeisPoint, StarPoint, FrameVector
from heislift.utils.numerics import central_difference, gradient, fd_step

logger = logging.getLogger(__name__)


class Field(str, Enum):
    """Vector fields understood by apply_field."""
    X = 'X'
    Y = 'Y'
    T = 'T'
    Z = 'Z'
    ZBAR = 'Zbar'
    STAR_X = 'X*'
    STAR_Y = 'Y*'
    STAR_T = 'T*'
    STAR_Z = 'Z*'
    STAR_ZBAR = 'Zbar*'

    @property
    def is_star(self) -> bool:
        return self.value.endswith('*')


class Form(str, Enum):
    """One-forms understood by eval_form."""
    OMEGA = 'omega'
    OMEGA_STAR = 'omega*'
    PHI_STAR = 'phi*'
    PSI_STAR = 'psi*'

    @property
    def is_star(self) -> bool:
        return self.value.endswith('*')


@dataclass(frozen=True)
class ScalarField:
    """
    A scalar function on H or H* with an optional analytic coordinate gradient.

    value takes a point and returns a real or complex number; gradient, when given,
    returns (dh/dx, dh/dy, dh/dt) at a point.
    """
    value: Callable[[HeisPoint], complex]
    gradient: Optional[Callable[[HeisPoint], Sequence[complex]]] = None

    def __call__(self, p: HeisPoint) -> complex:
        return self.value(p)


def field_coefficients(field: Field, coords: Sequence[float]) -> np.ndarray:
    """
    Components of a field over (d/dx, d/dy, d/dt) at the given coordinates.

    Parameters:
        field (Field): The vector field
        coords (sequence): (x, y, t)

    Returns:
        ndarray: Three complex components
    """
    x, y = float(coords[0]), float(coords[1])
    z = complex(x, y)
    r2 = x * x + y * y
    field = Field(field)

    if field is Field.X:
        return np.array([1.0, 0.0, 2.0 * y], dtype=complex)
    if field is Field.Y:
        return np.array([0.0, 1.0, -2.0 * x], dtype=complex)
    if field is Field.T:
        return np.array([0.0, 0.0, 1.0], dtype=complex)
    if field is Field.Z:
        return np.array([0.5, -0.5j, 1j * z.conjugate()])
    if field is Field.ZBAR:
        return np.array([0.5, 0.5j, -1j * z])
    if field is Field.STAR_X:
        return np.array([x, y, 0.0], dtype=complex)
    if field is Field.STAR_Y:
        return np.array([-y, x, -2.0 * r2], dtype=complex)
    if field is Field.STAR_T:
        return np.array([-y, x, 0.0], dtype=complex)
    if field is Field.STAR_Z:
        return np.array([0.5 * z, -0.5j * z, 1j * r2])
    return np.array([0.5 * z.conjugate(), 0.5j * z.conjugate(), -1j * r2])


def frame_matrix(p: HeisPoint) -> np.ndarray:
    """Rows are the real frame fields at p: (X*, Y*, T*) on H*, (X, Y, T) on H."""
    names = (Field.STAR_X, Field.STAR_Y, Field.STAR_T) if isinstance(p, StarPoint) \
        else (Field.X, Field.Y, Field.T)
    return np.array([field_coefficients(name, p.coords()).real for name in names])


def coordinate_gradient(h: Union[ScalarField, Callable], p: HeisPoint) -> np.ndarray:
    """
    Gradient (dh/dx, dh/dy, dh/dt) of a scalar function at p.

    Uses the analytic gradient of a ScalarField when present, central differences otherwise.
    A difference stencil that straddles a branch cut of h (an arg or atan2 jump) is rejected.

    Raises:
        NonFiniteDerivative: If neighbouring stencil samples differ by more than pi
    """
    if isinstance(h, ScalarField) and h.gradient is not None:
        return np.asarray(h.gradient(p), dtype=complex)

    point_type = type(p)
    samples = []

    def in_coords(coords):
        value = h(point_type.from_coords(coords))
        samples.append(value)
        return value

    grad = np.asarray(gradient(in_coords, p.coords()), dtype=complex)
    # four stencil samples per axis, in offset order
    for start in range(0, len(samples), 4):
        jump = float(np.max(np.abs(np.diff(np.asarray(samples[start:start + 4], dtype=complex)))))
        if jump > math.pi:
            raise NonFiniteDerivative(f"difference stencil around {p} jumps by {jump:.3g}; h has a branch cut there")
    return grad


def apply_field(field: Field, h: Union[ScalarField, Callable], p: HeisPoint) -> complex:
    """
    Apply a vector field to a scalar function at a point.

    Parameters:
        field (Field): One of X, Y, T, Z, Zbar and their starred counterparts
        h (callable or ScalarField): Function of a point
        p (HeisPoint or StarPoint): Evaluation point; starred fields need a StarPoint

    Returns:
        complex: The directional derivative

    Raises:
        NonFiniteDerivative: If the difference quotient is not finite
        TypeError: If a starred field is applied at a Heisenberg point
    """
    field = Field(field)
    if field.is_star and not isinstance(p, StarPoint):
        raise TypeError(f"field {field.value} is only defined on H*")
    return complex(np.dot(field_coefficients(field, p.coords()), coordinate_gradient(h, p)))


def bracket_residual(h: Union[ScalarField, Callable], p: HeisPoint) -> complex:
    """
    Residual of the single nontrivial bracket applied to h.

    On H* this is [X*, Y*]h - 2(Y* - T*)h; on H it is [X, Y]h + 4 T h.
    """
    if isinstance(p, StarPoint):
        first, second = Field.STAR_X, Field.STAR_Y
    else:
        first, second = Field.X, Field.Y

    def second_of(q):
        return apply_field(second, h, q)

    def first_of(q):
        return apply_field(first, h, q)

    bracket = apply_field(first, second_of, p) - apply_field(second, first_of, p)
    if isinstance(p, StarPoint):
        return bracket - 2.0 * (apply_field(Field.STAR_Y, h, p) - apply_field(Field.STAR_T, h, p))
    return bracket + 4.0 * apply_field(Field.T, h, p)


def form_coefficients(form: Form, coords: Sequence[float]) -> np.ndarray:
    """
    Components of a one-form over (dx, dy, dt).

    omega = dt + 2x dy - 2y dx, omega* = omega / (2|z|^2),
    phi* = (x dx + y dy) / |z|^2, psi* = -dt / (2|z|^2).
    """
    x, y = float(coords[0]), float(coords[1])
    r2 = x * x + y * y
    form = Form(form)

    if form is Form.OMEGA:
        return np.array([-2.0 * y, 2.0 * x, 1.0])
    if form is Form.OMEGA_STAR:
        return np.array([-2.0 * y, 2.0 * x, 1.0]) / (2.0 * r2)
    if form is Form.PHI_STAR:
        return np.array([x, y, 0.0]) / r2
    return np.array([0.0, 0.0, -1.0 / (2.0 * r2)])


def tangent_components(p: HeisPoint, v) -> np.ndarray:
    """Coordinate components of a FrameVector or a raw (dx, dy, dt) sequence."""
    if isinstance(v, FrameVector):
        return v.coordinate_vector()
    return np.asarray(v, dtype=float)


def eval_form(form: Form, p: HeisPoint, v) -> float:
    """
    Evaluate a one-form on a tangent vector.

    Parameters:
        form (Form): omega, omega*, phi* or psi*
        p (HeisPoint or StarPoint): Base point; starred forms need a StarPoint
        v (FrameVector or sequence): Tangent vector as frame coefficients or coordinate components

    Returns:
        float: The value of the form on v
    """
    form = Form(form)
    if form.is_star and not isinstance(p, StarPoint):
        raise TypeError(f"form {form.value} is only defined on H*")
    return float(np.dot(form_coefficients(form, p.coords()), tangent_components(p, v)))


def d_form(form: Form, p: HeisPoint, u, v) -> float:
    """
    Exterior derivative of a one-form evaluated on two tangent vectors.

    d(alpha)(u, v) = sum_ij (d_i alpha_j)(u_i v_j - u_j v_i), with the partial
    derivatives of the coefficients taken by central differences.
    """
    form = Form(form)
    base = p.coords()
    h = fd_step(base)
    jac = np.empty((3, 3))
    for i in range(3):
        unit = np.zeros(3)
        unit[i] = 1.0
        jac[i] = np.real(central_difference(lambda c: form_coefficients(form, c), base, unit, h))
    a, b = tangent_components(p, u), tangent_components(p, v)
    return float(a @ jac @ b - b @ jac @ a)


def contact_volume(p: HeisPoint, form: Form = None) -> float:
    """
    Value of alpha ^ d(alpha) on (d/dx, d/dy, d/dt).

    Defaults to omega* at star points and omega at Heisenberg points. The expected
    values are 1/|z|^4 for omega* and 4 for omega in the orientation (x, y, t).
    """
    if form is None:
        form = Form.OMEGA_STAR if isinstance(p, StarPoint) else Form.OMEGA
    e = np.eye(3)
    alpha = form_coefficients(form, p.coords())
    return float(alpha[0] * d_form(form, p, e[1], e[2])
                 - alpha[1] * d_form(form, p, e[0], e[2])
                 + alpha[2] * d_form(form, p, e[0], e[1]))


def alpha_pushforward(p: StarPoint, v) -> complex:
    """
    Push a tangent vector at p forward through the Koranyi map, by central differences.

    Returns:
        complex: d alpha(v) as a tangent vector of the left half-plane
    """
    def alpha_coords(c):
        return complex(-(c[0] * c[0] + c[1] * c[1]), c[2])

    return complex(central_difference(alpha_coords, p.coords(), tangent_components(p, v)))


def hyperbolic_inner(zeta: complex, u: complex, w: complex) -> float:
    """Hyperbolic metric of the left half-plane: Re(u conj(w)) / (4 Re(zeta)^2)."""
    return (u * w.conjugate()).real / (4.0 * zeta.real ** 2)
