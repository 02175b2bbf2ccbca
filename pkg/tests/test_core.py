import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from symdyn import core

TAU = 2.0 * math.pi

angles = st.floats(min_value=0.0, max_value=TAU, exclude_max=True, allow_nan=False)
scales = st.floats(min_value=1e-6, max_value=100.0, allow_nan=False)


# --- matrix_from_params ---------------------------------------------------


def test_zero_scale_gives_zero_matrix():
    m = core.matrix_from_params(0.0, 1.7)
    assert np.array_equal(m, np.zeros((2, 2)))


def test_angle_zero_is_diag_plus_minus():
    m = core.matrix_from_params(1.0, 0.0)
    assert np.array_equal(m, np.array([[1.0, 0.0], [0.0, -1.0]]))


def test_three_four_five_matrix():
    theta = math.atan2(4.0, 3.0)
    m = core.matrix_from_params(5.0, theta)
    # scalar-trig oracle for the expected entries
    a = 5.0 * math.cos(theta)
    b = 5.0 * math.sin(theta)
    assert m[0, 0] == a and m[0, 1] == b
    assert np.allclose(m, np.array([[3.0, 4.0], [4.0, -3.0]]), atol=1e-9, rtol=0.0)


def test_rejects_nonfinite():
    with pytest.raises(ValueError):
        core.matrix_from_params(math.nan, 0.0)
    with pytest.raises(ValueError):
        core.matrix_from_params(1.0, math.inf)


@given(scales, angles)
def test_symmetric_and_trace_exactly_zero(lam, theta):
    m = core.matrix_from_params(lam, theta)
    assert m[0, 1] == m[1, 0]
    assert m[0, 0] + m[1, 1] == 0.0


@given(scales, angles)
def test_negative_scale_absorbed_exactly(lam, theta):
    flipped = core.matrix_from_params(lam, core.mod_2pi(theta + math.pi))
    assert np.array_equal(core.matrix_from_params(-lam, theta), flipped)


@given(scales, angles)
def test_eigenvalues_are_plus_minus_scale(lam, theta):
    m = core.matrix_from_params(lam, theta)
    # characteristic polynomial is x^2 - lam^2: zero trace, det -lam^2
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    assert abs(det + lam * lam) <= 1e-9 * (1.0 + lam * lam)
    # independent spectral oracle
    eig = np.linalg.eigvalsh(m)
    assert abs(eig[0] + lam) <= 1e-9 * (1.0 + lam)
    assert abs(eig[1] - lam) <= 1e-9 * (1.0 + lam)


# --- decompose ------------------------------------------------------------


def test_decompose_zero_matrix():
    tz = core.decompose([[0.0, 0.0], [0.0, 0.0]])
    assert tz.lam == 0.0 and tz.theta == 0.0


def test_decompose_diag():
    tz = core.decompose([[1.0, 0.0], [0.0, -1.0]])
    assert tz.lam == 1.0 and tz.theta == 0.0


def test_decompose_three_four():
    tz = core.decompose([[3.0, 4.0], [4.0, -3.0]])
    assert abs(tz.lam - math.hypot(3.0, 4.0)) <= 1e-12
    assert oracles.ang_dist(tz.theta, math.atan2(4.0, 3.0)) <= 1e-12


def test_decompose_snaps_tiny_scale_to_zero():
    tz = core.decompose([[1e-12, -3e-13], [-3e-13, -1e-12]])
    assert tz.lam == 0.0 and tz.theta == 0.0


def test_decompose_rejects_asymmetric():
    with pytest.raises(core.NotSymmetricError):
        core.decompose([[1.0, 2.0], [3.0, -1.0]])


def test_decompose_rejects_nonzero_trace():
    with pytest.raises(core.NotTraceZeroError):
        core.decompose([[1.0, 2.0], [2.0, 1.0]])


def test_decompose_rejects_bad_shape():
    with pytest.raises(ValueError):
        core.decompose([[1.0, 2.0, 3.0]])


@given(scales, angles)
def test_round_trip(lam, theta):
    tz = core.decompose(core.matrix_from_params(lam, theta))
    assert abs(tz.lam - lam) <= 1e-9 * lam
    assert oracles.ang_dist(tz.theta, theta) <= 1e-9


# --- classify_orthogonal ---------------------------------------------------


def test_identity_is_rotation_zero():
    o = core.classify_orthogonal(np.eye(2))
    assert o.variant is core.OrthogonalVariant.ROTATION
    assert o.angle == 0.0


def test_swap_is_reflection_half_pi():
    o = core.classify_orthogonal([[0.0, 1.0], [1.0, 0.0]])
    assert o.variant is core.OrthogonalVariant.REFLECTION
    assert oracles.ang_dist(o.angle, math.pi / 2.0) <= 1e-12


def test_rotation_template_point_three():
    o = core.classify_orthogonal(oracles.rotation_cw(0.3))
    assert o.variant is core.OrthogonalVariant.ROTATION
    assert oracles.ang_dist(o.angle, 0.3) <= 1e-12


def test_rejects_non_orthogonal():
    with pytest.raises(core.NotOrthogonalError):
        core.classify_orthogonal([[1.0, 1.0], [0.0, 1.0]])
    with pytest.raises(core.NotOrthogonalError):
        core.classify_orthogonal(2.0 * np.eye(2))


@given(angles)
def test_rotation_templates_classify_back(alpha):
    o = core.classify_orthogonal(oracles.rotation_cw(alpha))
    assert o.variant is core.OrthogonalVariant.ROTATION
    assert oracles.ang_dist(o.angle, alpha) < 1e-9


@given(angles)
def test_reflection_templates_classify_back(beta):
    m = oracles.reflection_matrix_from_matrix_angle(beta)
    o = core.classify_orthogonal(m)
    assert o.variant is core.OrthogonalVariant.REFLECTION
    assert oracles.ang_dist(o.angle, beta) < 1e-9


@given(angles)
def test_reflection_matrices_are_unit_scale_trace_zero(beta):
    # every classified reflection is symmetric, trace zero, and of scale 1
    m = core.Orthogonal2(core.OrthogonalVariant.REFLECTION, beta).matrix()
    assert m[0, 1] == m[1, 0]
    assert abs(m[0, 0] + m[1, 1]) <= 1e-15
    tz = core.decompose(m)
    assert abs(tz.lam - 1.0) <= 1e-12
    assert oracles.ang_dist(tz.theta, beta) <= 1e-9


# --- corollary_witness ------------------------------------------------------


def test_witness_for_swap_matrix():
    a = core.decompose([[0.0, 1.0], [1.0, 0.0]])
    b, lam = core.corollary_witness(a)
    assert b.variant is core.OrthogonalVariant.REFLECTION
    assert abs(lam - 1.0) <= 1e-12
    assert oracles.ang_dist(b.angle, math.pi / 2.0) <= 1e-12


def test_witness_for_three_four():
    a = core.decompose([[3.0, 4.0], [4.0, -3.0]])
    b, lam = core.corollary_witness(a)
    assert abs(lam - 5.0) <= 1e-9
    assert np.allclose(b.matrix(), np.array([[0.6, 0.8], [0.8, -0.6]]), atol=1e-9, rtol=0.0)


def test_witness_for_zero_matrix():
    b, lam = core.corollary_witness(core.TraceZeroSym2(0.0, 0.0))
    assert lam == 0.0
    assert b.angle == 0.0
    assert np.array_equal(b.matrix(), np.array([[1.0, 0.0], [0.0, -1.0]]))


@given(scales, angles)
def test_witness_reassembles_exactly(lam, theta):
    a = core.TraceZeroSym2(lam, theta)
    b, scale = core.corollary_witness(a)
    assert np.array_equal(scale * b.matrix(), a.matrix())
    det = b.matrix()[0, 0] * b.matrix()[1, 1] - b.matrix()[0, 1] * b.matrix()[1, 0]
    assert abs(det + 1.0) <= 1e-12
    eig = np.linalg.eigvalsh(b.matrix())
    assert np.allclose(eig, [-1.0, 1.0], atol=1e-12)


# --- types ------------------------------------------------------------------


def test_tolerance_validates():
    with pytest.raises(ValueError):
        core.Tolerance(0.0)
    with pytest.raises(ValueError):
        core.Tolerance(-1e-9)
    t = core.Tolerance(1e-6)
    assert t.close(1.0, 1.0 + 1e-7)
    assert not t.close(1.0, 1.01)
    assert t.close(1e9, 1e9 + 100.0)  # relative for large values


def test_trace_zero_sym2_canonicalizes():
    tz = core.TraceZeroSym2(-2.0, 0.5)
    assert tz.lam == 2.0
    assert oracles.ang_dist(tz.theta, 0.5 + math.pi) <= 1e-15
    assert core.TraceZeroSym2(0.0, 5.0).theta == 0.0
    with pytest.raises(ValueError):
        core.TraceZeroSym2(math.nan, 0.0)


def test_mod_2pi_range_and_idempotence():
    for x in [-1e-20, -0.1, 0.0, 1.0, TAU, TAU + 0.5, -7.0, 1e9]:
        r = core.mod_2pi(x)
        assert 0.0 <= r < TAU
        assert core.mod_2pi(r) == r
