#!/usr/bin/env python3
"""
Tests for symplectic checks, the potentials psi and phi, and lifted maps.
"""

import cmath
import gc
import math
import weakref

import numpy as np
import pytest

from heislift.analysis import analyse_point, fibre_residual
from heislift.catalog import (
    make_identity, make_su11, make_twist, make_spiral_stretch, make_plain_stretch,
    make_heis_isometry, make_heis_affine
)
from heislift.errors import LeftHalfPlaneViolation, NotSymplectic, OrientationReversed
from heislift.geometry import HeisPoint, StarPoint, star_mul, su11_action, SU11Element
from heislift.lifting import (
    PlanarMap, symplectic_residual, euclidean_symplectic_residual, symplectic_gate,
    closedness_residual, potential_for, clear_potential_cache, psi_potential, phi_potential,
    lift_star, lift_heis
)
from heislift.utils.grids import grid_points, sweep
from heislift.utils.numerics import wirtinger

from conftest import random_heis_point, random_su11

ZETAS = [-1.0 + 0j, -0.3 + 1.7j, -2.5 - 0.4j, -0.05 + 0.2j, -4.0 + 3.0j, -0.7 - 2.0j]

STAR_POINTS = [
    StarPoint(0.5 * cmath.exp(0.3j), 1.0),
    StarPoint(1.2 * cmath.exp(2.1j), -0.5),
    StarPoint(0.8 * cmath.exp(-1.4j), 0.0),
    StarPoint(1.9 * cmath.exp(3.0j), 1.8),
    StarPoint(0.3 * cmath.exp(-2.7j), -1.2),
]

STANDARD_GRID = grid_points()


@pytest.fixture(autouse=True)
def fresh_potentials():
    clear_potential_cache()
    yield
    clear_potential_cache()


def assert_star_close(p, q, tol):
    assert abs(p.z - q.z) < tol
    assert abs(p.t - q.t) < tol


def lift_defect(F, points):
    """Largest of |R1|, |R2|, |lambda* - 1|, |mu_F - mu_f o alpha| and |T* f_II| over points."""
    worst = 0.0
    for p in points:
        report = analyse_point(F, p, with_jacobian=False)
        worst = max(worst, abs(report.R1), abs(report.R2), abs(report.lambda_star - 1.0),
                    abs(report.mu - F.expected_mu(p)), fibre_residual(F, p))
    return worst


# --- symplectic checks ------------------------------------------------------------

def test_identity_symplectic_residual_vanishes():
    f = make_identity().planar
    assert all(symplectic_residual(f, zeta) == 0.0 for zeta in ZETAS)


def test_su11_is_symplectic():
    f = make_su11(math.cos(0.3), math.sin(0.3), math.sin(0.3), math.cos(0.3)).planar
    assert max(symplectic_residual(f, zeta) for zeta in ZETAS) < 1e-10


def test_plain_stretch_is_not_symplectic():
    f = make_plain_stretch().planar
    assert symplectic_residual(f, -1.0 + 0.5j) == pytest.approx(1.25)
    with pytest.raises(NotSymplectic):
        symplectic_gate(f, ZETAS)


@pytest.mark.parametrize('kp', [0.0, 0.7])
@pytest.mark.parametrize('k', [0.0, 1.0, 2.5])
def test_spiral_stretch_is_symplectic(k, kp):
    f = make_spiral_stretch(k=k, kp=kp).planar
    assert max(symplectic_residual(f, zeta) for zeta in ZETAS) < 1e-8


@pytest.mark.parametrize('entry', [make_su11(1.3, 0.4, -0.6, 1.24 / 1.3), make_twist(k=1.5)], ids=['su11', 'twist'])
def test_closed_form_jacobian_derivative_matches_differences(entry):
    f = entry.planar
    for zeta in ZETAS:
        assert f.jacobian_derivative(zeta) == pytest.approx(wirtinger(f.jacobian, zeta)[0], rel=1e-6, abs=1e-9)


def test_jacobian_derivative_near_the_boundary():
    f = make_spiral_stretch(k=1.0, kp=1.0).planar
    zeta = -0.0625 - 1.0j
    coarse = wirtinger(f.jacobian, zeta, 0.04 * abs(zeta.real))[0]
    assert f.jacobian_derivative(zeta) == pytest.approx(coarse, rel=1e-4)


def test_symplectic_residual_rejects_points_outside_L():
    with pytest.raises(LeftHalfPlaneViolation):
        symplectic_residual(make_identity().planar, 0.5 + 1j)


def test_closedness_residuals():
    assert closedness_residual(make_identity().planar, -0.6 + 0.8j) < 1e-8
    assert closedness_residual(make_twist(k=1.0).planar, -0.6 + 0.8j) < 1e-6
    stretch = make_plain_stretch().planar
    assert closedness_residual(stretch, -1.0 + 0j) == pytest.approx(0.25, abs=1e-6)
    assert closedness_residual(stretch, -1.0 + 0.5j) > 1e-2


def test_euclidean_residual_of_affine_map():
    s = 0.4
    f = make_heis_affine(a_re=math.cosh(s), b_im=math.sinh(s)).planar
    assert euclidean_symplectic_residual(f, 0.3 - 2j) < 1e-12


# --- psi ----------------------------------------------------------------------------

@pytest.mark.parametrize('k', [0.5, 1.0, 2.0])
def test_twist_psi_matches_closed_form(k):
    entry = make_twist(k=k)
    for zeta in ZETAS:
        assert psi_potential(entry.planar, zeta) == pytest.approx(entry.closed_form_psi(zeta), abs=1e-8)


def test_su11_translation_psi_vanishes():
    f = make_su11(1.0, 0.8, 0.0, 1.0).planar
    assert max(abs(psi_potential(f, zeta)) for zeta in ZETAS) < 1e-12


def test_su11_psi_against_arctan():
    phi = 0.3
    a, b, c, d = math.cos(phi), math.sin(phi), math.sin(phi), math.cos(phi)
    entry = make_su11(a, b, c, d)
    # eta < d/c on every sample, so the arctan is continuous there
    gaps = [psi_potential(entry.planar, zeta) - math.atan(zeta.real / (zeta.imag - d / c)) for zeta in ZETAS]
    assert np.std(gaps) < 1e-7
    for zeta in ZETAS:
        assert psi_potential(entry.planar, zeta) == pytest.approx(entry.closed_form_psi(zeta), abs=1e-8)


def test_spiral_psi_matches_closed_form():
    entry = make_spiral_stretch(k=1.0, kp=0.6)
    for zeta in ZETAS:
        assert psi_potential(entry.planar, zeta) == pytest.approx(entry.closed_form_psi(zeta), abs=1e-8)


def test_psi_gradient_reproduces_defining_form():
    f = make_twist(k=1.0).planar
    potential = potential_for(f)
    for zeta in ZETAS[1:]:
        psi_zeta, psi_zetabar = wirtinger(potential, zeta)
        g = potential.gradient(zeta)
        assert abs(psi_zeta - g) < 1e-6
        assert abs(psi_zetabar - g.conjugate()) < 1e-6


def test_psi_is_path_independent():
    potential = potential_for(make_spiral_stretch(k=0.5, kp=1.0).planar)
    start = potential.basepoint
    for zeta in ZETAS[1:]:
        corner = start + 1j * (zeta - start).imag
        assert potential.along([start, corner, zeta]) == pytest.approx(potential(zeta), abs=1e-8)


def test_psi_normalization_and_basepoint():
    f = make_twist(k=1.0).planar
    assert psi_potential(f, -1.0) == 0.0
    assert psi_potential(f, -2.0 + 1j, basepoint=-2.0 + 1j) == 0.0
    shifted = psi_potential(f, -0.5 + 0.5j, basepoint=-2.0 + 1j)
    assert shifted == pytest.approx(psi_potential(f, -0.5 + 0.5j) - psi_potential(f, -2.0 + 1j), abs=1e-9)


def test_psi_needs_map_of_L():
    with pytest.raises(ValueError):
        psi_potential(make_heis_isometry('rotation', theta=0.2).planar, -1.0)
    with pytest.raises(LeftHalfPlaneViolation):
        psi_potential(make_identity().planar, 1.0 + 0j)


def test_potential_is_memoized():
    f = make_twist(k=1.0).planar
    potential = potential_for(f)
    assert potential_for(f) is potential
    value = potential(-0.3 + 1.7j)
    assert potential(-0.3 + 1.7j) == value
    assert len(potential) == 1


def test_potential_memo_belongs_to_its_map():
    f = make_twist(k=1.0).planar
    potential = potential_for(f)
    twin = make_twist(k=1.0).planar
    assert potential_for(twin) is not potential
    assert list(f.potentials.values()) == [potential]

    released = weakref.ref(f)
    del f, potential
    gc.collect()
    assert released() is None


def test_concurrent_potential_queries_agree():
    f = make_twist(k=2.0).planar
    sequential = [psi_potential(f, zeta) for zeta in ZETAS]
    clear_potential_cache()
    potential = potential_for(f)
    threaded = sweep(potential, ZETAS * 3, workers=4)
    assert threaded == pytest.approx(sequential * 3, abs=1e-12)


# --- phi ----------------------------------------------------------------------------

def test_phi_of_translation():
    c = 0.7 - 1.1j
    f = make_heis_isometry('translation', w_re=c.real, w_im=c.imag).planar
    for z in (0.5 + 0.5j, -2.0 + 1j, 3j):
        assert phi_potential(f, z) == pytest.approx(-2.0 * (c.conjugate() * z).imag, abs=1e-10)


def test_phi_of_rotation_vanishes():
    f = make_heis_isometry('rotation', theta=1.1).planar
    assert max(abs(phi_potential(f, z)) for z in (1 + 1j, -2.0, 0.3 - 4j)) < 1e-12


def test_phi_gradient_check():
    s = 0.6
    f = make_heis_affine(a_re=math.cosh(s), b_re=math.sinh(s) * math.cos(1.0),
                         b_im=math.sinh(s) * math.sin(1.0), c_re=0.2)
    potential = potential_for(f.planar)
    for z in (0.4 - 0.3j, -1.5 + 2j):
        assert abs(wirtinger(potential, z)[0] - potential.gradient(z)) < 1e-6


def test_phi_needs_map_of_plane():
    with pytest.raises(ValueError):
        phi_potential(make_identity().planar, 1j)


# --- lifts to H* --------------------------------------------------------------------

def test_identity_lift_is_identity():
    F = lift_star(make_identity().planar)
    for p in STAR_POINTS:
        assert_star_close(F(p), p, 1e-14)


@pytest.mark.parametrize('k', [0.0, 0.5, 1.0, 2.0])
def test_twist_lift_matches_closed_form(k):
    entry = make_twist(k=k, c=0.4)
    F = lift_star(entry.planar, phase=0.4)
    for p in STAR_POINTS:
        assert_star_close(F(p), entry.closed_form_lift(p), 1e-8)


@pytest.mark.parametrize('k', [0.0, 0.5, 1.0, 2.0])
def test_twist_lift_is_contact_and_quasiconformal(k):
    entry = make_twist(k=k)
    F = entry.lift()
    for p in STAR_POINTS:
        report = analyse_point(F, p)
        zeta = complex(-p.modulus_sq, p.t)
        assert report.contact_residual < 1e-6
        assert report.lambda_star == pytest.approx(1.0, abs=1e-6)
        assert abs(report.mu - entry.expected_mu(zeta)) < 1e-6
        assert abs(report.mu - F.expected_mu(p)) < 1e-6
        assert fibre_residual(F, p) < 1e-6
        assert report.jacobian_residual < 1e-5


def test_lift_second_component_is_planar_map_of_alpha():
    entry = make_spiral_stretch(k=1.0, kp=0.3)
    F = entry.lift()
    for p in STAR_POINTS:
        image = F(p)
        zeta = complex(-p.modulus_sq, p.t)
        assert abs(complex(-image.modulus_sq, image.t) - entry.planar(zeta)) < 1e-10


def test_su11_lift_matches_group_action():
    a, b, c, d, theta = 1.3, 0.4, -0.6, (1.0 - 0.4 * -0.6) / 1.3, 0.25
    g = SU11Element(a, b, c, d, theta)
    F = lift_star(make_su11(a, b, c, d, theta).planar, phase=theta - cmath.phase(d - 1j * c))
    for p in STAR_POINTS:
        assert_star_close(F(p), su11_action(g, p), 1e-7)


def test_su11_translation_lift_is_left_translation():
    F = make_su11(1.0, 0.8, 0.0, 1.0).lift()
    for p in STAR_POINTS:
        assert_star_close(F(p), star_mul(StarPoint(1.0, 0.8), p), 1e-12)


def test_spiral_lift_matches_closed_form():
    entry = make_spiral_stretch(k=2.0, kp=-0.5, c=1.0)
    F = entry.lift(phase=1.0)
    for p in STAR_POINTS:
        assert_star_close(F(p), entry.closed_form_lift(p), 1e-8)
        report = analyse_point(F, p, with_jacobian=False)
        assert report.contact_residual < 1e-6
        assert abs(report.mu - entry.expected_mu(complex(-p.modulus_sq, p.t))) < 1e-6


def test_su11_lifts_meet_lifting_theorem(rng):
    for _ in range(10):
        g = random_su11(rng)
        F = make_su11(g.a, g.b, g.c, g.d, g.theta).lift()
        assert lift_defect(F, STANDARD_GRID) < 1e-6


@pytest.mark.parametrize('k', [0.0, 0.5, 1.0, 2.0])
def test_twist_lifts_meet_lifting_theorem(k):
    assert lift_defect(make_twist(k=k).lift(), STANDARD_GRID) < 1e-6


@pytest.mark.parametrize('k, kp', [(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)])
def test_spiral_lifts_meet_lifting_theorem(k, kp):
    assert lift_defect(make_spiral_stretch(k=k, kp=kp).lift(), STANDARD_GRID) < 1e-6


def test_composition_coherence():
    outer = make_twist(k=1.0).planar
    inner = make_su11(math.cos(0.3), math.sin(0.3), math.sin(0.3), math.cos(0.3)).planar
    composite = lift_star(outer.compose(inner))
    F_outer, F_inner = lift_star(outer), lift_star(inner)

    phases = []
    for p in STAR_POINTS:
        direct = composite(p)
        chained = F_outer(F_inner(p))
        assert abs(direct.t - chained.t) < 1e-9
        assert abs(direct.z) == pytest.approx(abs(chained.z), rel=1e-9)
        phases.append(cmath.phase(direct.z / chained.z))
    assert np.std(phases) < 1e-7


def test_lift_rejects_non_symplectic_maps():
    f = make_plain_stretch().planar
    with pytest.raises(NotSymplectic):
        lift_star(f)
    F = lift_star(f, force=True)
    assert F.forced
    assert F.descriptor().forced


def test_lift_rejects_orientation_reversing_maps():
    flip = PlanarMap(lambda zeta: zeta.conjugate(), lambda zeta: (0j, 1.0 + 0j), domain='L', name='flip')
    F = lift_star(flip, force=True)
    with pytest.raises(OrientationReversed):
        F(StarPoint(1.0, 0.5))


def test_lift_descriptor_fields():
    F = make_twist(k=2.0).lift(phase=0.3)
    descriptor = F.descriptor()
    assert descriptor.kind == 'star'
    assert descriptor.source == {'name': 'twist', 'k': 2.0, 'c': 0.0}
    assert descriptor.basepoint == (-1.0, 0.0)
    assert descriptor.phase == 0.3
    assert not descriptor.forced


def test_lift_star_needs_map_of_L():
    with pytest.raises(ValueError):
        lift_star(make_heis_isometry('rotation', theta=0.2).planar)


# --- lifts to H ---------------------------------------------------------------------

def test_rotation_lifts_to_rotation():
    entry = make_heis_isometry('rotation', theta=0.9)
    F = lift_heis(entry.planar)
    for p in (HeisPoint(1.0, 0.0), HeisPoint(-0.3 + 2j, 1.5)):
        assert_star_close(F(p), entry.closed_form_lift(p), 1e-12)


def test_translation_lifts_to_left_translation():
    entry = make_heis_isometry('translation', w_re=0.7, w_im=-1.1)
    F = lift_heis(entry.planar)
    for p in (HeisPoint(0.5 + 0.5j, 0.0), HeisPoint(-2.0 + 1j, -1.0)):
        assert_star_close(F(p), entry.closed_form_lift(p), 1e-10)


def test_affine_lifts_are_contact(rng):
    for _ in range(10):
        s, alpha, beta = rng.uniform(0.0, 1.0), rng.uniform(-np.pi, np.pi), rng.uniform(-np.pi, np.pi)
        a, b, c = math.cosh(s) * cmath.exp(1j * alpha), math.sinh(s) * cmath.exp(1j * beta), complex(*rng.uniform(-1, 1, 2))
        entry = make_heis_affine(a.real, a.imag, b.real, b.imag, c.real, c.imag)
        F = entry.lift()
        p = random_heis_point(rng)
        report = analyse_point(F, p)
        assert report.contact_residual < 1e-7
        assert report.lambda_star == pytest.approx(1.0, abs=1e-7)
        assert abs(report.mu - b / a) < 1e-7
        assert fibre_residual(F, p) == 0.0


def test_lift_heis_rejects_non_unimodular_maps():
    f = PlanarMap(lambda z: 2.0 * z, lambda z: (2.0 + 0j, 0j), domain='C', name='double')
    with pytest.raises(NotSymplectic):
        lift_heis(f)
    assert lift_heis(f, force=True).forced
