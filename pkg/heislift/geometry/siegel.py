#!/usr/bin/env python3
"""
Embedding of H* in the boundary of the Siegel domain and the CR pullback check.
"""

import math
from typing import Tuple

import numpy as np

from heislift.geometry.frames import eval_form, tangent_components, Form
from heislift.geometry.points import HeisPoint, StarPoint
from heislift.utils.numerics import central_difference

_SQRT2 = math.sqrt(2.0)


def siegel_embed(p: HeisPoint) -> Tuple[complex, complex]:
    """Psi(z, t) = (-|z|^2 + i t, sqrt(2) z)."""
    return complex(-p.modulus_sq, p.t), _SQRT2 * p.z


def siegel_defining(z1: complex, z2: complex) -> float:
    """rho(z1, z2) = 2 Re(z1) + |z2|^2, zero on the boundary."""
    return 2.0 * z1.real + abs(z2) ** 2


def eta_star(z1: complex, z2: complex, dz1: complex, dz2: complex) -> float:
    """The boundary form (dy1 + Im(conj(z2) dz2)) / |z2|^2 on a tangent (dz1, dz2)."""
    return (dz1.imag + (z2.conjugate() * dz2).imag) / abs(z2) ** 2


def pullback_residual(p: StarPoint, v) -> float:
    """
    |(Psi^* eta*)(v) - omega*(v)| with the pushforward of v taken by central differences.

    Parameters:
        p (StarPoint): Base point
        v (FrameVector or sequence): Tangent vector at p
    """
    vec = tangent_components(p, v)

    def embed(coords):
        z1, z2 = siegel_embed(HeisPoint.from_coords(coords))
        return np.array([z1, z2])

    dz1, dz2 = central_difference(embed, p.coords(), vec)
    z1, z2 = siegel_embed(p)
    return abs(eta_star(z1, z2, complex(dz1), complex(dz2)) - eval_form(Form.OMEGA_STAR, p, vec))
