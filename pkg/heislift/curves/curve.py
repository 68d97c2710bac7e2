#!/usr/bin/env python3
"""
Curve values for the plane, the left half-plane, H and H*.

A curve is an ordered set of nodes with an evaluator that gives position and
velocity anywhere on [a, b]. Analytic curves carry their own evaluator; curves
read from files are interpolated by a cubic spline.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.interpolate import CubicSpline

from heislift.config import MIN_CURVE_SAMPLES, CLOSEDNESS_REL_TOL, STAR_POINT_MIN_MODULUS
from heislift.errors import TooFewSamples, MalformedCurveFile, InvalidPoint, LeftHalfPlaneViolation
from heislift.geometry.points import HeisPoint, StarPoint
from heislift.utils.numerics import sample_derivative


class CurveKind(str, Enum):
    """Where a curve lives."""
    PLANE = 'plane'
    HYPERBOLIC = 'hyperbolic'
    HEIS = 'heis'
    STAR = 'star'

    @property
    def is_group(self) -> bool:
        return self in (CurveKind.HEIS, CurveKind.STAR)


class CurveEvaluator:
    """Position and velocity of a curve at arbitrary parameters."""

    analytic = True

    def position(self, s: np.ndarray) -> Tuple[np.ndarray, Optional[np.ndarray]]:
        raise NotImplementedError

    def velocity(self, s: np.ndarray) -> Tuple[np.ndarray, Optional[np.ndarray]]:
        raise NotImplementedError


class FunctionEvaluator(CurveEvaluator):
    """Evaluator built from vectorized callables for z, dz/ds and optionally t, dt/ds."""

    def __init__(self, z: Callable, dz: Callable, t: Callable = None, dt: Callable = None):
        self._z, self._dz, self._t, self._dt = z, dz, t, dt

    def position(self, s):
        s = np.asarray(s, dtype=float)
        z = np.asarray(self._z(s), dtype=complex) * np.ones_like(s)
        t = None if self._t is None else np.asarray(self._t(s), dtype=float) * np.ones_like(s)
        return z, t

    def velocity(self, s):
        s = np.asarray(s, dtype=float)
        dz = np.asarray(self._dz(s), dtype=complex) * np.ones_like(s)
        dt = None if self._dt is None else np.asarray(self._dt(s), dtype=float) * np.ones_like(s)
        return dz, dt


class SplineEvaluator(CurveEvaluator):
    """Cubic-spline interpolation of sampled nodes."""

    analytic = False

    def __init__(self, params: np.ndarray, z: np.ndarray, t: Optional[np.ndarray] = None):
        columns = [z.real, z.imag] + ([] if t is None else [t])
        self._has_t = t is not None
        self._spline = CubicSpline(params, np.column_stack(columns), axis=0)
        self._derivative = self._spline.derivative()

    def _split(self, values):
        z = values[..., 0] + 1j * values[..., 1]
        t = values[..., 2] if self._has_t else None
        return z, t

    def position(self, s):
        return self._split(self._spline(np.asarray(s, dtype=float)))

    def velocity(self, s):
        return self._split(self._derivative(np.asarray(s, dtype=float)))


@dataclass(frozen=True, eq=False)
class Curve:
    """
    A sampled curve with an evaluator.

    Attributes:
        kind (CurveKind): plane, hyperbolic, heis or star
        params (ndarray): Strictly increasing parameters, at least three
        z (ndarray): Complex node values (the point, zeta, or the z coordinate)
        t (ndarray or None): Vertical coordinate for group curves
        evaluator (CurveEvaluator): Position and velocity between nodes
    """
    kind: CurveKind
    params: np.ndarray
    z: np.ndarray
    t: Optional[np.ndarray] = None
    evaluator: Optional[CurveEvaluator] = field(default=None, compare=False)

    def __post_init__(self):
        kind = CurveKind(self.kind)
        params = np.asarray(self.params, dtype=float)
        z = np.asarray(self.z, dtype=complex)
        t = None if self.t is None else np.asarray(self.t, dtype=float)
        object.__setattr__(self, 'kind', kind)
        object.__setattr__(self, 'params', params)
        object.__setattr__(self, 'z', z)
        object.__setattr__(self, 't', t)

        if params.ndim != 1 or z.shape != params.shape:
            raise MalformedCurveFile("parameters and points must be one-dimensional and of equal length")
        if params.size < MIN_CURVE_SAMPLES:
            raise TooFewSamples(f"a curve needs at least {MIN_CURVE_SAMPLES} nodes, got {params.size}")
        if not np.all(np.diff(params) > 0):
            raise MalformedCurveFile("curve parameters must be strictly increasing")
        if kind.is_group and (t is None or t.shape != params.shape):
            raise MalformedCurveFile(f"a {kind.value} curve needs a t column")
        if not np.all(np.isfinite(z)) or (t is not None and not np.all(np.isfinite(t))):
            raise InvalidPoint("curve nodes must be finite")
        if kind is CurveKind.HYPERBOLIC and np.any(z.real >= 0.0):
            raise LeftHalfPlaneViolation("a hyperbolic curve must stay in Re(zeta) < 0")
        if kind is CurveKind.STAR and np.any(np.abs(z) <= STAR_POINT_MIN_MODULUS):
            raise InvalidPoint("a star curve must avoid z = 0")

        if self.evaluator is None:
            object.__setattr__(self, 'evaluator', SplineEvaluator(params, z, t if kind.is_group else None))

    @classmethod
    def from_function(cls, kind: CurveKind, z: Callable, dz: Callable, a: float, b: float,
                      n: int = 65, t: Callable = None, dt: Callable = None) -> 'Curve':
        """
        Sample an analytic curve on n uniform nodes of [a, b].

        Parameters:
            kind (CurveKind): Where the curve lives
            z, dz (callable): Vectorized position and velocity of the complex coordinate
            a, b (float): Parameter interval
            n (int): Number of nodes
            t, dt (callable, optional): Vertical coordinate and its derivative (group curves)

        Returns:
            Curve: The sampled curve with an analytic evaluator
        """
        evaluator = FunctionEvaluator(z, dz, t, dt)
        params = np.linspace(a, b, n)
        zs, ts = evaluator.position(params)
        return cls(kind, params, zs, ts, evaluator)

    @classmethod
    def from_samples(cls, kind: CurveKind, params, z, t=None) -> 'Curve':
        """Curve from raw samples, interpolated by a cubic spline."""
        return cls(kind, params, z, t)

    @property
    def interval(self) -> Tuple[float, float]:
        return float(self.params[0]), float(self.params[-1])

    def __len__(self) -> int:
        return self.params.size

    def node_velocity(self) -> Tuple[np.ndarray, Optional[np.ndarray]]:
        """Velocity at the nodes: analytic when available, finite differences otherwise."""
        if self.evaluator.analytic:
            return self.evaluator.velocity(self.params)
        dz = sample_derivative(self.z, self.params)
        dt = None if self.t is None else sample_derivative(self.t, self.params)
        return dz, dt

    def points(self):
        """Nodes as HeisPoint or StarPoint values (group curves only)."""
        point_type = StarPoint if self.kind is CurveKind.STAR else HeisPoint
        return [point_type(z, t) for z, t in zip(self.z, self.t)]

    def endpoint_gap(self) -> float:
        gap = abs(self.z[-1] - self.z[0])
        if self.t is not None:
            gap = float(np.hypot(gap, self.t[-1] - self.t[0]))
        return float(gap)

    def is_closed(self, rel_tol: float = CLOSEDNESS_REL_TOL) -> bool:
        """Endpoint mismatch below rel_tol * (1 + |gamma(a)|)."""
        start = abs(self.z[0]) if self.t is None else float(np.hypot(abs(self.z[0]), self.t[0]))
        return self.endpoint_gap() < rel_tol * (1.0 + start)
