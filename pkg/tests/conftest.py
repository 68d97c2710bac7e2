#!/usr/bin/env python3
"""
Shared fixtures for the heislift test suite.
"""

import cmath

import numpy as np
import pytest

from heislift.geometry import HeisPoint, StarPoint, SU11Element


def random_star_point(rng, r_min=0.3, r_max=2.0, t_max=2.0) -> StarPoint:
    r = rng.uniform(r_min, r_max)
    theta = rng.uniform(-np.pi, np.pi)
    return StarPoint(r * cmath.exp(1j * theta), rng.uniform(-t_max, t_max))


def random_heis_point(rng, scale=2.0) -> HeisPoint:
    return HeisPoint(complex(*rng.uniform(-scale, scale, 2)), rng.uniform(-scale, scale))


def random_su11(rng, theta=None) -> SU11Element:
    a = rng.uniform(0.5, 2.0)
    b = rng.uniform(-1.0, 1.0)
    c = rng.uniform(-1.0, 1.0)
    d = (1.0 - b * c) / a
    return SU11Element(a, b, c, d, rng.uniform(-np.pi, np.pi) if theta is None else theta)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
