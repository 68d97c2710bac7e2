#!/usr/bin/env python3
"""
Smooth maps of the left half-plane L or of the plane C.
"""

from typing import Any, Callable, Dict, Optional, Tuple

from heislift.config import FD_BASE_STEP
from heislift.errors import LeftHalfPlaneViolation
from heislift.utils.numerics import wirtinger

Derivs = Callable[[complex], Tuple[complex, complex]]


class PlanarMap:
    """
    A planar map f with its Wirtinger derivatives.

    Parameters:
        func (callable): zeta -> f(zeta)
        derivs (callable, optional): zeta -> (f_zeta, f_zetabar); central
            differences of func when omitted
        domain (str): 'L' for maps of the left half-plane, 'C' for maps of the plane
        name (str): Label used in reports
        spec (dict, optional): Catalog specification this map was built from
        jacobian_deriv (callable, optional): zeta -> d J_f / d zeta in closed form
    """

    def __init__(self, func: Callable[[complex], complex], derivs: Optional[Derivs] = None,
                 domain: str = 'L', name: str = 'map', spec: Optional[Dict[str, Any]] = None,
                 jacobian_deriv: Optional[Callable[[complex], complex]] = None):
        if domain not in ('L', 'C'):
            raise ValueError(f"domain must be 'L' or 'C', got {domain!r}")
        self._func = func
        self._derivs = derivs
        self._jacobian_deriv = jacobian_deriv
        self.domain = domain
        self.name = name
        self.spec = spec if spec is not None else {'name': name}
        # Potential per basepoint, filled by potential_for
        self.potentials: Dict[complex, Any] = {}

    @property
    def analytic(self) -> bool:
        return self._derivs is not None

    def __call__(self, zeta: complex) -> complex:
        return complex(self._func(complex(zeta)))

    def derivs(self, zeta: complex) -> Tuple[complex, complex]:
        zeta = complex(zeta)
        if self._derivs is not None:
            f_z, f_zbar = self._derivs(zeta)
            return complex(f_z), complex(f_zbar)
        return wirtinger(self._func, zeta)

    def jacobian(self, zeta: complex) -> float:
        """J_f = |f_zeta|^2 - |f_zetabar|^2."""
        f_z, f_zbar = self.derivs(zeta)
        return abs(f_z) ** 2 - abs(f_zbar) ** 2

    def jacobian_derivative(self, zeta: complex) -> complex:
        """
        d J_f / d zeta, in closed form when given, otherwise by central differences of jacobian().

        On L the difference step is scaled by |Re zeta|.
        """
        zeta = complex(zeta)
        if self._jacobian_deriv is not None:
            return complex(self._jacobian_deriv(zeta))
        step = None
        if self.domain == 'L' and zeta.real < 0.0:
            step = FD_BASE_STEP * min(max(1.0, abs(zeta)), abs(zeta.real))
        return wirtinger(self.jacobian, zeta, step)[0]

    def mu(self, zeta: complex) -> complex:
        """Complex dilatation f_zetabar / f_zeta."""
        f_z, f_zbar = self.derivs(zeta)
        return f_zbar / f_z

    def imag_derivative(self, zeta: complex) -> complex:
        """(Im f)_zeta = (f_zeta - conj(f_zetabar)) / 2i."""
        f_z, f_zbar = self.derivs(zeta)
        return (f_z - f_zbar.conjugate()) / 2j

    def check_image(self, zeta: complex) -> complex:
        """
        Evaluate f and require the image to lie in L for L-maps.

        Raises:
            LeftHalfPlaneViolation: If Re f(zeta) >= 0 for a map of L
        """
        value = self(zeta)
        if self.domain == 'L' and not value.real < 0.0:
            raise LeftHalfPlaneViolation(f"f({zeta}) = {value} is not in the left half-plane")
        return value

    def compose(self, inner: 'PlanarMap') -> 'PlanarMap':
        """
        The composite self o inner, with chain-rule derivatives.

        (f o g)_zeta = f_w g_zeta + f_wbar conj(g_zetabar),
        (f o g)_zetabar = f_w g_zetabar + f_wbar conj(g_zeta).
        """
        outer = self

        def func(zeta):
            return outer(inner(zeta))

        def derivs(zeta):
            g_z, g_zbar = inner.derivs(zeta)
            f_w, f_wbar = outer.derivs(inner(zeta))
            return (f_w * g_z + f_wbar * g_zbar.conjugate(),
                    f_w * g_zbar + f_wbar * g_z.conjugate())

        return PlanarMap(
            func, derivs if (outer.analytic and inner.analytic) else None,
            domain=self.domain, name=f"{outer.name}o{inner.name}",
            spec={'compose': [outer.spec, inner.spec]},
        )

    def __repr__(self):
        return f"PlanarMap({self.name!r}, domain={self.domain!r}, analytic={self.analytic})"
