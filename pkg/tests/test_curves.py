#!/usr/bin/env python3
"""
Tests for horizontal curves, lengths, lifts and holonomy.
"""

import math

import numpy as np
import pytest

from heislift.curves import (
    Curve, CurveKind, horizontality_defect, horizontal_length_heis, horizontal_length_star,
    hyperbolic_length, lift_plane_curve_heis, lift_hyperbolic_curve, holonomy_closed,
    grid_area, read_curve, format_curve
)
from heislift.errors import (
    NotHorizontal, NotClosed, TooFewSamples, LeftHalfPlaneViolation, MalformedCurveFile
)

TWO_PI = 2.0 * math.pi


def unit_circle(turns=1.0, n=65) -> Curve:
    return Curve.from_function(
        CurveKind.PLANE, lambda s: np.exp(1j * s), lambda s: 1j * np.exp(1j * s), 0.0, TWO_PI * turns, n
    )


def hyperbolic_circle(center=-1.0, radius=0.5, n=65) -> Curve:
    return Curve.from_function(
        CurveKind.HYPERBOLIC,
        lambda s: center + radius * np.exp(1j * s),
        lambda s: 1j * radius * np.exp(1j * s),
        0.0, TWO_PI, n
    )


def hyperbolic_disk_area(center, radius):
    a = -center
    return 0.5 * math.pi * (a / math.sqrt(a * a - radius * radius) - 1.0)


def random_hyperbolic_curve(rng) -> Curve:
    c, w1, w2, a, b = rng.uniform(-0.5, 0.5), rng.uniform(1, 4), rng.uniform(1, 4), rng.uniform(-1, 1), rng.uniform(-1, 1)
    return Curve.from_function(
        CurveKind.HYPERBOLIC,
        lambda s: -2.0 + c * np.cos(w1 * s) + 1j * (a * np.sin(w2 * s) + b * s),
        lambda s: -c * w1 * np.sin(w1 * s) + 1j * (a * w2 * np.cos(w2 * s) + b),
        0.0, 1.0, 17
    )


# --- curve values -------------------------------------------------------------

def test_curve_needs_three_nodes():
    with pytest.raises(TooFewSamples):
        Curve.from_samples(CurveKind.PLANE, [0.0, 1.0], [0j, 1 + 0j])


def test_curve_parameters_must_increase():
    with pytest.raises(MalformedCurveFile):
        Curve.from_samples(CurveKind.PLANE, [0.0, 2.0, 1.0], [0j, 1j, 2j])


def test_hyperbolic_curve_must_stay_left():
    with pytest.raises(LeftHalfPlaneViolation):
        Curve.from_samples(CurveKind.HYPERBOLIC, [0.0, 1.0, 2.0], [-1 + 0j, 0.5 + 0j, -1 + 1j])


# --- horizontality ------------------------------------------------------------

def test_fibre_circle_is_not_horizontal():
    curve = Curve.from_function(
        CurveKind.STAR, lambda s: np.exp(1j * s), lambda s: 1j * np.exp(1j * s), 0.0, 1.0, 9,
        t=lambda s: 0.0 * s, dt=lambda s: 0.0 * s
    )
    assert horizontality_defect(curve) == pytest.approx(1.0)


def test_real_segment_is_horizontal():
    curve = Curve.from_function(
        CurveKind.HEIS, lambda s: s + 1.0, lambda s: 1.0 + 0.0 * s, 0.0, 1.0, 9,
        t=lambda s: 0.0 * s, dt=lambda s: 0.0 * s
    )
    assert horizontality_defect(curve) == 0.0


def test_length_rejects_non_horizontal_curve():
    curve = Curve.from_function(
        CurveKind.HEIS, lambda s: s + 0j, lambda s: 1.0 + 0.0 * s, 0.0, 1.0, 9,
        t=lambda s: s, dt=lambda s: 1.0 + 0.0 * s
    )
    with pytest.raises(NotHorizontal):
        horizontal_length_heis(curve)


# --- lifts to H ---------------------------------------------------------------

def test_unit_circle_lift():
    lifted = lift_plane_curve_heis(unit_circle(), t0=0.0)
    assert horizontality_defect(lifted) < 1e-8
    assert lifted.t[-1] - lifted.t[0] == pytest.approx(-4.0 * math.pi, abs=1e-6)
    assert horizontal_length_heis(lifted) == pytest.approx(TWO_PI, abs=1e-8)
    assert np.max(np.abs(lifted.z - unit_circle().z)) < 1e-12


def test_real_segment_lift_stays_level():
    segment = Curve.from_function(CurveKind.PLANE, lambda s: s + 0j, lambda s: 1.0 + 0.0 * s, 0.0, 1.0, 9)
    lifted = lift_plane_curve_heis(segment, t0=0.75)
    assert np.allclose(lifted.t, 0.75, atol=1e-15)
    assert horizontal_length_heis(lifted) == pytest.approx(1.0, abs=1e-12)


def test_constant_curve_lift():
    point = Curve.from_function(CurveKind.PLANE, lambda s: 0.3 - 0.2j + 0.0 * s, lambda s: 0.0 * s, 0.0, 1.0, 5)
    lifted = lift_plane_curve_heis(point, t0=2.0)
    assert np.allclose(lifted.t, 2.0)
    assert horizontal_length_heis(lifted) == 0.0


def test_length_reparameterization_invariance():
    reparam = Curve.from_function(
        CurveKind.PLANE, lambda s: np.exp(1j * s * s), lambda s: 2j * s * np.exp(1j * s * s),
        0.0, math.sqrt(TWO_PI), 65
    )
    assert horizontal_length_heis(lift_plane_curve_heis(reparam)) == pytest.approx(TWO_PI, rel=1e-8)


def test_sampled_lift_has_small_fd_defect():
    lifted = lift_plane_curve_heis(unit_circle(n=401))
    sampled = Curve.from_samples(CurveKind.HEIS, lifted.params, lifted.z, lifted.t)
    assert horizontality_defect(sampled) < 1e-6


# --- lifts to H* --------------------------------------------------------------

def test_star_length_of_exponential_ray():
    curve = Curve.from_function(
        CurveKind.STAR, lambda s: np.exp(s) + 0j, lambda s: np.exp(s) + 0j, 0.0, 1.0, 9,
        t=lambda s: 0.0 * s, dt=lambda s: 0.0 * s
    )
    assert horizontal_length_star(curve) == pytest.approx(1.0, abs=1e-12)


def test_hyperbolic_length_of_ray():
    ray = Curve.from_function(CurveKind.HYPERBOLIC, lambda s: -np.exp(s) + 0j, lambda s: -np.exp(s) + 0j, 0.0, 1.0, 9)
    assert hyperbolic_length(ray) == pytest.approx(0.5, abs=1e-12)
    lifted = lift_hyperbolic_curve(ray, theta0=0.4)
    assert np.allclose(np.angle(lifted.z), 0.4, atol=1e-14)


def test_constant_hyperbolic_curve():
    point = Curve.from_function(CurveKind.HYPERBOLIC, lambda s: -2.0 + 1j + 0.0 * s, lambda s: 0.0 * s, 0.0, 1.0, 5)
    assert hyperbolic_length(point) == 0.0
    lifted = lift_hyperbolic_curve(point, theta0=1.0)
    assert np.allclose(lifted.z, math.sqrt(2.0) * np.exp(1j))
    assert np.allclose(lifted.t, 1.0)


def test_star_lifts_are_horizontal_and_preserve_length(rng):
    for _ in range(20):
        source = random_hyperbolic_curve(rng)
        lifted = lift_hyperbolic_curve(source, theta0=rng.uniform(-np.pi, np.pi))
        assert horizontality_defect(lifted) < 1e-8
        projected = -np.abs(lifted.z) ** 2 + 1j * lifted.t
        assert np.max(np.abs(projected - source.z)) < 1e-12
        assert horizontal_length_star(lifted) == pytest.approx(hyperbolic_length(source), rel=1e-8)


# --- holonomy -----------------------------------------------------------------

def test_unit_circle_holonomy():
    report = holonomy_closed(unit_circle(), 'heis')
    assert report.delta == pytest.approx(-4.0 * math.pi, abs=1e-6)
    assert report.area_oracle == pytest.approx(math.pi, abs=1e-8)
    assert report.residual < 1e-6
    assert report.grid_residual < 1e-4


def test_point_curve_holonomy():
    point = Curve.from_function(CurveKind.PLANE, lambda s: 0.5 + 0.0 * s + 0j, lambda s: 0.0 * s, 0.0, 1.0, 5)
    report = holonomy_closed(point, 'heis')
    assert (report.delta, report.area_oracle, report.residual) == (0.0, 0.0, 0.0)


def test_hyperbolic_circle_holonomy():
    report = holonomy_closed(hyperbolic_circle(), 'star')
    area = hyperbolic_disk_area(-1.0, 0.5)
    assert report.area_oracle == pytest.approx(area, abs=1e-8)
    assert report.delta == pytest.approx(-2.0 * area, abs=1e-6)
    assert report.residual < 1e-6
    assert report.grid_residual < 1e-4


def test_holonomy_is_linear_in_traversals():
    once = holonomy_closed(unit_circle(1.0), 'heis')
    twice = holonomy_closed(unit_circle(2.0, n=129), 'heis')
    assert twice.delta == pytest.approx(2.0 * once.delta, abs=1e-8)


def test_clockwise_circle_has_negative_area():
    clockwise = Curve.from_function(
        CurveKind.PLANE, lambda s: np.exp(-1j * s), lambda s: -1j * np.exp(-1j * s), 0.0, TWO_PI, 65
    )
    assert grid_area(clockwise) == pytest.approx(-math.pi, abs=1e-4)


def test_open_curve_has_no_holonomy():
    half = Curve.from_function(CurveKind.PLANE, lambda s: np.exp(1j * s), lambda s: 1j * np.exp(1j * s), 0.0, math.pi, 33)
    with pytest.raises(NotClosed):
        holonomy_closed(half, 'heis')


# --- files --------------------------------------------------------------------

def test_sampled_circle_file_holonomy(tmp_path):
    path = tmp_path / "circle.csv"
    path.write_text(format_curve(unit_circle(n=401), 'csv'))
    curve = read_curve(str(path))
    assert curve.kind is CurveKind.PLANE
    report = holonomy_closed(curve, 'heis')
    assert report.delta == pytest.approx(-4.0 * math.pi, abs=1e-5)


def test_json_curve_with_kind_override(tmp_path):
    path = tmp_path / "hcircle.json"
    path.write_text(format_curve(hyperbolic_circle(n=401), 'json'))
    curve = read_curve(str(path), kind='hyperbolic')
    report = holonomy_closed(curve, 'star')
    assert report.delta == pytest.approx(-2.0 * hyperbolic_disk_area(-1.0, 0.5), abs=1e-5)


@pytest.mark.parametrize("content", [
    "x,y\n0,1\n",
    "s,re,im\n0,1,0\n1,abc,0\n2,1,1\n",
    "s,re,im\n0,1,0\n1,2\n2,1,1\n",
    "",
])
def test_malformed_curve_files(tmp_path, content):
    path = tmp_path / "bad.csv"
    path.write_text(content)
    with pytest.raises(MalformedCurveFile):
        read_curve(str(path))


def test_missing_curve_file(tmp_path):
    with pytest.raises(MalformedCurveFile):
        read_curve(str(tmp_path / "absent.csv"))
