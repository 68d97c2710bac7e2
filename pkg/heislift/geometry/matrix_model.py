#!/usr/bin/env python3
"""
Matrix model of H* and the SU(1,1) x U(1) action.

H* embeds in U(2,1) through

    M(z, t) = [[|z|, 0, i t/|z|], [0, z/|z|, 0], [0, 0, 1/|z|]],

which preserves the Hermitian form with anti-diagonal matrix J. An element of
SU(1,1) is written [[a, i b], [i c, d]] with real entries and a d + b c = 1; it
acts on the left half-plane by zeta -> (a zeta + i b)/(i c zeta + d) and, with a
U(1) phase theta, on H* by

    (z, t) -> (z e^(i theta) / (i c zeta + d), Im((a zeta + i b)/(i c zeta + d))).
"""

import cmath
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from heislift.config import SINGULAR_DENOMINATOR, SU11_DETERMINANT_TOL
from heislift.errors import DeterminantViolation, SingularDenominator
from heislift.geometry.points import StarPoint

J_MATRIX = np.array([[0, 0, 1], [0, 1, 0], [1, 0, 0]], dtype=complex)


def matrix_model(p: StarPoint) -> np.ndarray:
    """
    The matrix M(z, t) of a point of H*.

    Parameters:
        p (StarPoint): A point of H*

    Returns:
        ndarray: 3x3 complex matrix; M(p * q) = M(p) M(q) and M J M^* = J
    """
    r = abs(p.z)
    return np.array([
        [r, 0.0, 1j * p.t / r],
        [0.0, p.z / r, 0.0],
        [0.0, 0.0, 1.0 / r],
    ], dtype=complex)


def matrix_params(p: StarPoint) -> Tuple[float, float, float]:
    """Parameters (|z|, arg z, t) of the matrix model, arg in (-pi, pi]."""
    return abs(p.z), math.atan2(p.y, p.x), p.t


def matrix_from_params(r: float, theta: float, s: float) -> np.ndarray:
    """Matrix of the point (r e^(i theta), s)."""
    return matrix_model(StarPoint(r * cmath.exp(1j * theta), s))


def star_from_matrix(m: np.ndarray) -> StarPoint:
    """Read a point of H* back from its matrix."""
    r = m[0, 0].real
    return StarPoint(m[1, 1] * r, (m[0, 2] * r).imag)


@dataclass(frozen=True)
class SU11Element:
    """An element of SU(1,1) x U(1): real a, b, c, d with a d + b c = 1 and a phase theta."""
    a: float
    b: float
    c: float
    d: float
    theta: float = 0.0

    def __post_init__(self):
        for name in ('a', 'b', 'c', 'd', 'theta'):
            object.__setattr__(self, name, float(getattr(self, name)))
        det = self.a * self.d + self.b * self.c
        if abs(det - 1.0) > SU11_DETERMINANT_TOL:
            raise DeterminantViolation(f"ad + bc = {det!r}, expected 1")

    def matrix(self) -> np.ndarray:
        return np.array([[self.a, 1j * self.b], [1j * self.c, self.d]])

    def denominator(self, zeta):
        """i c zeta + d."""
        return 1j * self.c * zeta + self.d

    def mobius(self, zeta):
        """(a zeta + i b)/(i c zeta + d); accepts scalars or arrays."""
        return (self.a * zeta + 1j * self.b) / self.denominator(zeta)


def su11_identity() -> SU11Element:
    return SU11Element(1.0, 0.0, 0.0, 1.0, 0.0)


def su11_compose(g1: SU11Element, g2: SU11Element, tol: float = SU11_DETERMINANT_TOL) -> SU11Element:
    """
    The product g1 g2, acting as g1 after g2.

    Round-off in long products is absorbed by rescaling onto ad + bc = 1.
    """
    a = g1.a * g2.a - g1.b * g2.c
    b = g1.a * g2.b + g1.b * g2.d
    c = g1.c * g2.a + g1.d * g2.c
    d = g1.d * g2.d - g1.c * g2.b
    det = a * d + b * c
    if abs(det - 1.0) > tol:
        scale = 1.0 / math.sqrt(det)
        a, b, c, d = a * scale, b * scale, c * scale, d * scale
    return SU11Element(a, b, c, d, g1.theta + g2.theta)


def su11_action(g: SU11Element, p: StarPoint) -> StarPoint:
    """
    Apply an element of SU(1,1) x U(1) to a point of H*.

    Parameters:
        g (SU11Element): Group element
        p (StarPoint): Point of H*

    Returns:
        StarPoint: The image point

    Raises:
        SingularDenominator: If |i c zeta + d| < 1e-300
    """
    zeta = complex(-p.modulus_sq, p.t)
    denom = g.denominator(zeta)
    if abs(denom) < SINGULAR_DENOMINATOR:
        raise SingularDenominator(f"i c zeta + d vanishes at zeta = {zeta}")
    return StarPoint(p.z * cmath.exp(1j * g.theta) / denom, g.mobius(zeta).imag)
