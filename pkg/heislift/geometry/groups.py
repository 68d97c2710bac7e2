#!/usr/bin/env python3
"""
Group laws of the Heisenberg group H and the hyperbolic Heisenberg group H*.

This module provides:
- Multiplication, inverses and units for both groups
- The Koranyi gauge and the Koranyi-Cygan distance on H
- The Koranyi map alpha: H* -> L and its circle-bundle chart
"""

import math
from typing import Tuple

import numpy as np

from heislift.geometry.points import HeisPoint, StarPoint, HypPoint


def heis_mul(p: HeisPoint, q: HeisPoint) -> HeisPoint:
    """
    Heisenberg product (z, t) * (w, s) = (z + w, t + s + 2 Im(z conj(w))).

    Parameters:
        p (HeisPoint): Left factor
        q (HeisPoint): Right factor

    Returns:
        HeisPoint: The product
    """
    return HeisPoint(p.z + q.z, p.t + q.t + 2.0 * (p.z * q.z.conjugate()).imag)


def heis_inv(p: HeisPoint) -> HeisPoint:
    """Inverse (-z, -t)."""
    return HeisPoint(-p.z, -p.t)


def heis_unit() -> HeisPoint:
    return HeisPoint(0j, 0.0)


def heis_gauge(p: HeisPoint) -> float:
    """Koranyi gauge |(z, t)| = (|z|^4 + t^2)^(1/4)."""
    return math.sqrt(abs(complex(-p.modulus_sq, p.t)))


def koranyi_cygan_dist(p: HeisPoint, q: HeisPoint) -> float:
    """
    Koranyi-Cygan distance |p^-1 * q|.

    Parameters:
        p (HeisPoint): First point
        q (HeisPoint): Second point

    Returns:
        float: The distance, symmetric and left-invariant
    """
    return heis_gauge(heis_mul(heis_inv(p), q))


def star_mul(p: StarPoint, q: StarPoint) -> StarPoint:
    """
    Product in H*: (z, t) * (w, s) = (z w, t + s |z|^2).

    Parameters:
        p (StarPoint): Left factor
        q (StarPoint): Right factor

    Returns:
        StarPoint: The product
    """
    return StarPoint(p.z * q.z, p.t + q.t * p.modulus_sq)


def star_inv(p: StarPoint) -> StarPoint:
    """Inverse (1/z, -t/|z|^2)."""
    return StarPoint(1.0 / p.z, -p.t / p.modulus_sq)


def star_unit() -> StarPoint:
    return StarPoint(1.0 + 0j, 0.0)


def koranyi_alpha(p: StarPoint) -> HypPoint:
    """
    The Koranyi map alpha(z, t) = -|z|^2 + i t.

    Parameters:
        p (StarPoint): A point of H*

    Returns:
        HypPoint: Its image in the left half-plane
    """
    return HypPoint(complex(-p.modulus_sq, p.t))


def alpha_value(z, t):
    """Vectorized -|z|^2 + i t for array arguments."""
    z = np.asarray(z)
    return -(z.real ** 2 + z.imag ** 2) + 1j * np.asarray(t)


def left_arg(zeta):
    """Argument of zeta in (pi/2, 3pi/2), continuous on the left half-plane."""
    zeta = np.asarray(zeta)
    return np.pi + np.arctan2(-zeta.imag, -zeta.real)


def star_chart(p: StarPoint) -> Tuple[complex, float]:
    """Circle-bundle chart (alpha(p), arg z) with arg z in (-pi, pi]."""
    return koranyi_alpha(p).zeta, math.atan2(p.y, p.x)


def star_from_chart(zeta: complex, theta: float) -> StarPoint:
    """Inverse of star_chart: (sqrt(-xi) e^(i theta), eta)."""
    point = HypPoint(zeta)
    return StarPoint(math.sqrt(-point.xi) * complex(math.cos(theta), math.sin(theta)), point.eta)
