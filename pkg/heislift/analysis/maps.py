#!/usr/bin/env python3
"""
Maps of H* and H and their first derivatives.

A map F = (f_I, f_3) sends (z, t) to (f_I(z, t), f_3(z, t)). Its derivatives are
exchanged as Wirtinger partials (d/dz, d/dzbar, d/dt) of both components; every
frame derivative is a combination of these.
"""

from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from heislift.geometry.points import HeisPoint, StarPoint
from heislift.utils.numerics import gradient


@dataclass(frozen=True)
class Partials:
    """
    Values and Wirtinger partials of a map at a point.

    The partials of the real component f_3 satisfy d f_3/dzbar = conj(d f_3/dz).
    """
    f: complex
    f3: float
    f_z: complex
    f_zbar: complex
    f_t: complex
    f3_z: complex
    f3_t: float

    @property
    def f3_zbar(self) -> complex:
        return self.f3_z.conjugate()

    def coordinate_jacobian(self) -> np.ndarray:
        """The real 3x3 matrix d(x', y', t') / d(x, y, t)."""
        f_x = self.f_z + self.f_zbar
        f_y = 1j * (self.f_z - self.f_zbar)
        f3_x = 2.0 * self.f3_z.real
        f3_y = -2.0 * self.f3_z.imag
        return np.array([
            [f_x.real, f_y.real, self.f_t.real],
            [f_x.imag, f_y.imag, self.f_t.imag],
            [f3_x, f3_y, self.f3_t],
        ])


def partials_from_gradient(values, grad) -> Partials:
    """
    Assemble Partials from component values and their coordinate gradient.

    Parameters:
        values (sequence): (f_I, f_3)
        grad (ndarray): 3 x 2 array of d/dx, d/dy, d/dt of (f_I, f_3)
    """
    grad = np.asarray(grad, dtype=complex)
    f_x, f_y, f_t = grad[:, 0]
    g_x, g_y, g_t = grad[:, 1].real
    return Partials(
        f=complex(values[0]),
        f3=float(np.real(values[1])),
        f_z=0.5 * (f_x - 1j * f_y),
        f_zbar=0.5 * (f_x + 1j * f_y),
        f_t=complex(f_t),
        f3_z=0.5 * complex(g_x, -g_y),
        f3_t=float(g_t),
    )


class StarMap:
    """
    A map of H* (kind 'star') or of H (kind 'heis').

    Subclasses implement value(); partials() defaults to central differences of
    value() and is overridden where derivatives are known in closed form.
    """

    kind = 'star'
    analytic = False

    @property
    def point_type(self):
        return StarPoint if self.kind == 'star' else HeisPoint

    def value(self, p: HeisPoint) -> Tuple[complex, float]:
        raise NotImplementedError

    def __call__(self, p: HeisPoint) -> HeisPoint:
        f, f3 = self.value(p)
        return self.point_type(f, f3)

    def numeric_partials(self, p: HeisPoint) -> Partials:
        """Partials by fourth-order central differences of value()."""
        point_type = self.point_type

        def components(coords):
            f, f3 = self.value(point_type.from_coords(coords))
            return np.array([f, f3], dtype=complex)

        return partials_from_gradient(self.value(p), gradient(components, p.coords()))

    def partials(self, p: HeisPoint) -> Partials:
        return self.numeric_partials(p)


class FunctionMap(StarMap):
    """
    A map given by plain callables.

    Parameters:
        f_I (callable): Point -> complex first component
        f_3 (callable): Point -> real third component
        kind (str): 'star' or 'heis'
        partials (callable, optional): Point -> Partials in closed form
        name (str): Label used in reports
    """

    def __init__(self, f_I: Callable, f_3: Callable, kind: str = 'star',
                 partials: Optional[Callable[[HeisPoint], Partials]] = None, name: str = 'map'):
        self._f_I = f_I
        self._f_3 = f_3
        self._partials = partials
        self.kind = kind
        self.analytic = partials is not None
        self.name = name

    def value(self, p):
        return complex(self._f_I(p)), float(self._f_3(p))

    def partials(self, p):
        if self._partials is not None:
            return self._partials(p)
        return self.numeric_partials(p)

    def __repr__(self):
        return f"FunctionMap({self.name!r}, kind={self.kind!r})"


def identity_map(kind: str = 'star') -> FunctionMap:
    """The identity of H* or H with exact partials."""
    def exact(p):
        return Partials(f=p.z, f3=p.t, f_z=1.0 + 0j, f_zbar=0j, f_t=0j, f3_z=0j, f3_t=1.0)

    return FunctionMap(lambda p: p.z, lambda p: p.t, kind=kind, partials=exact, name='identity')
