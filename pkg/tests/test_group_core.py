#!/usr/bin/env python3
"""
Tests for group laws, frames, forms, the matrix model and the Siegel embedding.
"""

import cmath
import math

import numpy as np
import pytest

from heislift.errors import (
    DeterminantViolation, DomainViolation, InvalidPoint, LeftHalfPlaneViolation, NonFiniteDerivative
)
from heislift.geometry import (
    HeisPoint, StarPoint, HypPoint, FrameVector, Field, Form, ScalarField,
    heis_mul, heis_inv, heis_unit, heis_gauge, koranyi_cygan_dist,
    star_mul, star_inv, star_unit, koranyi_alpha, star_chart, star_from_chart,
    left_translation, rotation, conjugation, dilation, inversion,
    apply_field, bracket_residual, eval_form, d_form, contact_volume,
    alpha_pushforward, hyperbolic_inner,
    J_MATRIX, SU11Element, matrix_model, matrix_params, matrix_from_params, star_from_matrix,
    su11_identity, su11_compose, su11_action,
    siegel_embed, siegel_defining, pullback_residual
)

from conftest import random_star_point, random_heis_point, random_su11


def assert_heis_close(p, q, tol=1e-12):
    assert abs(p.z - q.z) < tol
    assert abs(p.t - q.t) < tol


# --- points -------------------------------------------------------------------

def test_star_point_rejects_zero():
    with pytest.raises(InvalidPoint):
        StarPoint(0j, 1.0)
    with pytest.raises(InvalidPoint):
        StarPoint(1e-200, 0.0)


def test_points_reject_non_finite():
    with pytest.raises(InvalidPoint):
        HeisPoint(complex(float('nan'), 0.0), 0.0)
    with pytest.raises(InvalidPoint):
        HeisPoint(1j, float('inf'))


def test_hyp_point_requires_left_half_plane():
    assert HypPoint(-1 + 2j).eta == 2.0
    with pytest.raises(LeftHalfPlaneViolation):
        HypPoint(0.0 + 1j)


# --- Heisenberg group ---------------------------------------------------------

def test_heis_mul_hand_value():
    assert_heis_close(heis_mul(HeisPoint(1, 0), HeisPoint(1j, 0)), HeisPoint(1 + 1j, -2.0))


def test_heis_unit_and_inverse(rng):
    for _ in range(20):
        p = random_heis_point(rng)
        assert_heis_close(heis_mul(heis_unit(), p), p)
        assert_heis_close(heis_mul(p, heis_inv(p)), heis_unit())


def test_heis_associativity(rng):
    for _ in range(100):
        p, q, r = (random_heis_point(rng) for _ in range(3))
        assert_heis_close(heis_mul(heis_mul(p, q), r), heis_mul(p, heis_mul(q, r)), 1e-11)


def test_gauge_and_distance_values():
    assert heis_gauge(HeisPoint(1, 0)) == pytest.approx(1.0)
    assert heis_gauge(HeisPoint(0, 16)) == pytest.approx(4.0)
    assert koranyi_cygan_dist(HeisPoint(0, 0), HeisPoint(1, 0)) == pytest.approx(1.0)
    p = HeisPoint(0.3 - 1j, 2.0)
    assert koranyi_cygan_dist(p, p) == 0.0


def test_distance_symmetric(rng):
    for _ in range(50):
        p, q = random_heis_point(rng), random_heis_point(rng)
        assert koranyi_cygan_dist(p, q) == pytest.approx(koranyi_cygan_dist(q, p), rel=1e-12)


def test_distance_invariances(rng):
    for _ in range(100):
        p, q = random_heis_point(rng), random_heis_point(rng)
        w, s = complex(*rng.uniform(-2, 2, 2)), rng.uniform(-2, 2)
        theta = rng.uniform(-np.pi, np.pi)
        delta = rng.uniform(0.2, 5.0)
        d = koranyi_cygan_dist(p, q)

        assert koranyi_cygan_dist(left_translation(w, s, p), left_translation(w, s, q)) == pytest.approx(d, rel=1e-10)
        assert koranyi_cygan_dist(rotation(theta, p), rotation(theta, q)) == pytest.approx(d, rel=1e-10)
        assert koranyi_cygan_dist(conjugation(p), conjugation(q)) == pytest.approx(d, rel=1e-10)
        assert koranyi_cygan_dist(dilation(delta, p), dilation(delta, q)) == pytest.approx(delta * d, rel=1e-10)


def test_inversion_similarity(rng):
    for _ in range(100):
        p, q = random_heis_point(rng), random_heis_point(rng)
        expected = koranyi_cygan_dist(p, q) / (heis_gauge(p) * heis_gauge(q))
        assert koranyi_cygan_dist(inversion(p), inversion(q)) == pytest.approx(expected, rel=1e-10)


def test_inversion_is_involution_and_undefined_at_origin(rng):
    p = random_heis_point(rng)
    assert_heis_close(inversion(inversion(p)), p, 1e-10)
    with pytest.raises(DomainViolation):
        inversion(HeisPoint(0, 0))


def test_similarity_hand_values():
    assert_heis_close(rotation(math.pi / 2, HeisPoint(1, 0)), HeisPoint(1j, 0))
    assert_heis_close(conjugation(HeisPoint(1j, 3)), HeisPoint(-1j, -3))
    assert_heis_close(dilation(2.0, HeisPoint(1, 1)), HeisPoint(2, 4))


# --- hyperbolic Heisenberg group ----------------------------------------------

def test_star_mul_hand_values():
    assert_heis_close(star_mul(StarPoint(2, 3), StarPoint(1, 1)), StarPoint(2, 7))
    assert_heis_close(star_inv(StarPoint(2, 4)), StarPoint(0.5, -1))
    assert_heis_close(star_inv(StarPoint(1j, 1)), StarPoint(-1j, -1))
    assert_heis_close(star_inv(star_unit()), star_unit())


def test_star_group_axioms(rng):
    for _ in range(200):
        p, q, r = (random_star_point(rng) for _ in range(3))
        assert_heis_close(star_mul(star_mul(p, q), r), star_mul(p, star_mul(q, r)), 1e-11)
        assert_heis_close(star_mul(star_unit(), p), p)
        assert_heis_close(star_mul(p, star_inv(p)), star_unit(), 1e-12)


def test_koranyi_alpha_values():
    assert koranyi_alpha(StarPoint(1 + 1j, 5)).zeta == pytest.approx(-2 + 5j)
    assert koranyi_alpha(StarPoint(1, 0)).zeta == -1
    for theta in np.linspace(-3.0, 3.0, 7):
        assert koranyi_alpha(StarPoint(cmath.exp(1j * theta), 0.7)).zeta == pytest.approx(-1 + 0.7j, abs=1e-15)


def test_star_chart_inverse():
    p = StarPoint(0.4 - 1.1j, -0.3)
    zeta, theta = star_chart(p)
    assert_heis_close(star_from_chart(zeta, theta), p, 1e-14)


# --- frames and forms ---------------------------------------------------------

def test_T_star_of_arg_is_one():
    arg = ScalarField(lambda q: math.atan2(q.y, q.x))
    for p in (StarPoint(1 + 0.5j, 0.3), StarPoint(0.2 + 2j, -1.0)):
        assert apply_field(Field.STAR_T, arg, p) == pytest.approx(1.0, abs=1e-9)


def test_difference_stencil_across_branch_cut_is_rejected():
    arg = ScalarField(lambda q: math.atan2(q.y, q.x))
    with pytest.raises(NonFiniteDerivative):
        apply_field(Field.STAR_T, arg, StarPoint(-1.0 + 1e-5j, 0.0))


def test_T_star_kills_functions_of_zeta(rng):
    h = lambda q: (complex(-q.modulus_sq, q.t)) ** 2 + cmath.exp(complex(-q.modulus_sq, q.t))
    for _ in range(10):
        assert abs(apply_field(Field.STAR_T, h, random_star_point(rng))) < 1e-8


def test_Z_star_equals_z_times_Z(rng):
    h = lambda q: q.x ** 2 * q.y + 1j * q.t * q.x
    for _ in range(10):
        p = random_star_point(rng)
        assert apply_field(Field.STAR_Z, h, p) == pytest.approx(p.z * apply_field(Field.Z, h, p), abs=1e-8)


def test_analytic_gradient_is_used():
    h = ScalarField(lambda q: q.t, gradient=lambda q: (0.0, 0.0, 1.0))
    p = StarPoint(1 + 1j, 0.0)
    # Y* has dt component -2|z|^2
    assert apply_field(Field.STAR_Y, h, p) == -4.0


def test_starred_field_needs_star_point():
    with pytest.raises(TypeError):
        apply_field(Field.STAR_X, lambda q: q.x, HeisPoint(1, 0))


@pytest.mark.parametrize("poly", [
    lambda q: q.x ** 2 * q.y + q.t * q.x,
    lambda q: q.y * q.t ** 2 - 3.0 * q.x ** 3,
    lambda q: q.x * q.y * q.t + q.t ** 2,
])
def test_bracket_residuals(rng, poly):
    for _ in range(5):
        assert abs(bracket_residual(poly, random_star_point(rng))) < 1e-5
        assert abs(bracket_residual(poly, random_heis_point(rng, 1.0))) < 1e-5


def test_form_duality_and_reeb(rng):
    for _ in range(20):
        p = random_star_point(rng)
        X, Y, T = (FrameVector(p, e) for e in np.eye(3))
        assert eval_form(Form.OMEGA_STAR, p, T) == pytest.approx(1.0, abs=1e-12)
        assert eval_form(Form.OMEGA_STAR, p, X) == pytest.approx(0.0, abs=1e-12)
        assert eval_form(Form.OMEGA_STAR, p, Y) == pytest.approx(0.0, abs=1e-12)
        assert eval_form(Form.PHI_STAR, p, X) == pytest.approx(1.0, abs=1e-12)
        assert eval_form(Form.PHI_STAR, p, Y) == pytest.approx(0.0, abs=1e-12)
        assert eval_form(Form.PSI_STAR, p, Y) == pytest.approx(1.0, abs=1e-12)
        assert eval_form(Form.PSI_STAR, p, X) == pytest.approx(0.0, abs=1e-12)
        u = rng.normal(size=3)
        assert abs(d_form(Form.OMEGA_STAR, p, T, u)) < 1e-8


def test_horizontal_frame_vector():
    p = StarPoint(1j, 0)
    assert FrameVector(p, (1.0, 2.0, 0.0)).is_horizontal
    assert not FrameVector(p, (0.0, 0.0, 1.0)).is_horizontal


def test_omega_on_heisenberg_frame(rng):
    p = random_heis_point(rng)
    assert eval_form(Form.OMEGA, p, FrameVector(p, (1, 0, 0))) == pytest.approx(0.0, abs=1e-12)
    assert eval_form(Form.OMEGA, p, FrameVector(p, (0, 1, 0))) == pytest.approx(0.0, abs=1e-12)
    assert eval_form(Form.OMEGA, p, FrameVector(p, (0, 0, 1))) == pytest.approx(1.0)


def test_contact_volumes(rng):
    for _ in range(10):
        p = random_star_point(rng)
        assert contact_volume(p) == pytest.approx(1.0 / abs(p.z) ** 4, rel=1e-7)
        assert contact_volume(random_heis_point(rng)) == pytest.approx(4.0, rel=1e-9)


def test_alpha_pushforward_is_orthonormal(rng):
    for _ in range(200):
        p = random_star_point(rng)
        zeta = koranyi_alpha(p).zeta
        ux = alpha_pushforward(p, FrameVector(p, (1, 0, 0)))
        uy = alpha_pushforward(p, FrameVector(p, (0, 1, 0)))
        ut = alpha_pushforward(p, FrameVector(p, (0, 0, 1)))
        assert abs(hyperbolic_inner(zeta, ux, ux) - 1.0) < 1e-6
        assert abs(hyperbolic_inner(zeta, uy, uy) - 1.0) < 1e-6
        assert abs(hyperbolic_inner(zeta, ux, uy)) < 1e-6
        assert abs(ut) < 1e-8


# --- matrix model and SU(1,1) -------------------------------------------------

def test_matrix_model_unit_is_identity():
    assert np.allclose(matrix_model(star_unit()), np.eye(3), atol=0.0)


def test_matrix_model_homomorphism_and_form(rng):
    for _ in range(1000):
        p, q = random_star_point(rng), random_star_point(rng)
        mp = matrix_model(p)
        assert np.max(np.abs(matrix_model(star_mul(p, q)) - mp @ matrix_model(q))) < 1e-12
        assert np.max(np.abs(mp @ J_MATRIX @ mp.conj().T - J_MATRIX)) < 1e-12


def test_matrix_params():
    p = StarPoint(-2j, 1.5)
    r, theta, s = matrix_params(p)
    assert (r, theta, s) == pytest.approx((2.0, -math.pi / 2, 1.5))
    assert_heis_close(star_from_matrix(matrix_from_params(r, theta, s)), p, 1e-14)


def test_su11_determinant_is_checked():
    with pytest.raises(DeterminantViolation):
        SU11Element(1.0, 1.0, 1.0, 1.0)


def test_su11_action_special_cases(rng):
    p = random_star_point(rng)
    assert_heis_close(su11_action(su11_identity(), p), p)
    assert_heis_close(su11_action(SU11Element(1.0, 0.7, 0.0, 1.0), p), StarPoint(p.z, p.t + 0.7))
    a = 1.7
    assert_heis_close(su11_action(SU11Element(a, 0.0, 0.0, 1.0 / a), p), StarPoint(a * p.z, a * a * p.t), 1e-12)


def test_su11_action_composes(rng):
    for _ in range(50):
        g1, g2 = random_su11(rng), random_su11(rng)
        p = random_star_point(rng)
        lhs = su11_action(g1, su11_action(g2, p))
        rhs = su11_action(su11_compose(g1, g2), p)
        assert_heis_close(lhs, rhs, 1e-10)


def test_su11_action_lands_on_mobius_image(rng):
    g = random_su11(rng)
    p = random_star_point(rng)
    image = su11_action(g, p)
    assert koranyi_alpha(image).zeta == pytest.approx(g.mobius(koranyi_alpha(p).zeta), abs=1e-12)


# --- Siegel embedding ---------------------------------------------------------

def test_siegel_embed_value():
    z1, z2 = siegel_embed(StarPoint(1, 0))
    assert z1 == -1
    assert z2 == pytest.approx(math.sqrt(2.0))


def test_siegel_boundary_and_pullback(rng):
    for _ in range(50):
        p = random_star_point(rng)
        assert abs(siegel_defining(*siegel_embed(p))) < 1e-12
        assert pullback_residual(p, FrameVector(p, (0, 0, 1))) < 1e-6
        assert pullback_residual(p, rng.normal(size=3)) < 1e-6
