#!/usr/bin/env python3
"""
Point and tangent-vector types for the Heisenberg groups and the left half-plane.
"""

import math
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np

from heislift.config import STAR_POINT_MIN_MODULUS
from heislift.errors import InvalidPoint, LeftHalfPlaneViolation


@dataclass(frozen=True)
class HeisPoint:
    """A point (z, t) of the Heisenberg group."""
    z: complex
    t: float

    def __post_init__(self):
        object.__setattr__(self, 'z', complex(self.z))
        object.__setattr__(self, 't', float(self.t))
        if not (math.isfinite(self.z.real) and math.isfinite(self.z.imag) and math.isfinite(self.t)):
            raise InvalidPoint(f"non-finite coordinates ({self.z}, {self.t})")

    @property
    def x(self) -> float:
        return self.z.real

    @property
    def y(self) -> float:
        return self.z.imag

    @property
    def modulus_sq(self) -> float:
        return self.x * self.x + self.y * self.y

    def coords(self) -> np.ndarray:
        """Real coordinates (x, y, t)."""
        return np.array([self.x, self.y, self.t])

    @classmethod
    def from_coords(cls, coords: Sequence[float]) -> 'HeisPoint':
        return cls(complex(coords[0], coords[1]), coords[2])


class StarPoint(HeisPoint):
    """A point (z, t) of the hyperbolic Heisenberg group; z must be nonzero."""

    def __post_init__(self):
        super().__post_init__()
        if abs(self.z) <= STAR_POINT_MIN_MODULUS:
            raise InvalidPoint(f"|z| = {abs(self.z):.3g} is not a valid star-group coordinate")


@dataclass(frozen=True)
class HypPoint:
    """A point zeta = xi + i eta of the left half-plane."""
    zeta: complex

    def __post_init__(self):
        object.__setattr__(self, 'zeta', complex(self.zeta))
        if not (math.isfinite(self.zeta.real) and math.isfinite(self.zeta.imag)):
            raise InvalidPoint(f"non-finite coordinate {self.zeta}")
        if self.zeta.real >= 0.0:
            raise LeftHalfPlaneViolation(f"Re(zeta) = {self.zeta.real} is not negative")

    @property
    def xi(self) -> float:
        return self.zeta.real

    @property
    def eta(self) -> float:
        return self.zeta.imag


GroupPoint = Union[HeisPoint, StarPoint]


@dataclass(frozen=True)
class FrameVector:
    """
    A tangent vector given by coefficients over a frame.

    For star points the frame is {X*, Y*, T*}; for Heisenberg points it is {X, Y, T}.
    """
    base: HeisPoint
    coeffs: Tuple[float, float, float]

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(float(c) for c in self.coeffs))
        if len(self.coeffs) != 3:
            raise InvalidPoint("a frame vector needs exactly three coefficients")

    @property
    def is_star(self) -> bool:
        return isinstance(self.base, StarPoint)

    @property
    def is_horizontal(self) -> bool:
        return self.coeffs[2] == 0.0

    def coordinate_vector(self) -> np.ndarray:
        """Components over (d/dx, d/dy, d/dt)."""
        from heislift.geometry.frames import frame_matrix
        return frame_matrix(self.base).T @ np.asarray(self.coeffs)
