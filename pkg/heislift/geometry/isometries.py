#!/usr/bin/env python3
"""
Heisenberg similarities: left translations, rotations, conjugation, dilations and inversion.
"""

import cmath

from heislift.config import SINGULAR_DENOMINATOR
from heislift.errors import DomainViolation, InvalidPoint
from heislift.geometry.groups import heis_mul
from heislift.geometry.points import HeisPoint


def left_translation(w: complex, s: float, p: HeisPoint) -> HeisPoint:
    """L_(w,s)(p) = (w, s) * p."""
    return heis_mul(HeisPoint(w, s), p)


def rotation(theta: float, p: HeisPoint) -> HeisPoint:
    """R_theta(z, t) = (z e^(i theta), t)."""
    return HeisPoint(p.z * cmath.exp(1j * theta), p.t)


def conjugation(p: HeisPoint) -> HeisPoint:
    """j(z, t) = (conj(z), -t)."""
    return HeisPoint(p.z.conjugate(), -p.t)


def dilation(delta: float, p: HeisPoint) -> HeisPoint:
    """D_delta(z, t) = (delta z, delta^2 t), delta > 0."""
    if delta <= 0.0:
        raise InvalidPoint(f"dilation factor must be positive, got {delta}")
    return HeisPoint(delta * p.z, delta * delta * p.t)


def inversion(p: HeisPoint) -> HeisPoint:
    """
    Koranyi inversion I(z, t) = (z / zeta, -t / |zeta|^2) with zeta = -|z|^2 + i t.

    Distances transform as d(Ip, Iq) = d(p, q) / (|p| |q|).

    Raises:
        DomainViolation: At the origin
    """
    zeta = complex(-p.modulus_sq, p.t)
    if abs(zeta) < SINGULAR_DENOMINATOR:
        raise DomainViolation("inversion is undefined at the origin")
    return HeisPoint(p.z / zeta, -p.t / abs(zeta) ** 2)
