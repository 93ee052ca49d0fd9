import math

import numpy as np
import pytest
from scipy.spatial.transform import Rotation

from strapnav.geom import (
    FAST_ATAN_MAX_ERROR,
    cne,
    dcm_to_euler,
    dcm_to_quat,
    euler_to_dcm,
    euler_to_quat,
    fast_atan2,
    inertial_rate,
    platform_atan2,
    quat_conjugate,
    quat_multiply,
    quat_normalize,
    quat_rotate,
    quat_to_dcm,
    quat_to_rotvec,
    rotation_angle_between,
    rotvec_to_quat,
    transport_rate,
    wrap_pi,
    wrap_two_pi,
)
from strapnav.models.attitude import Dcm, EulerAngles, Quaternion
from strapnav.utils.errors import DomainError, QuaternionNormError


def random_quat(rng) -> Quaternion:
    q = rng.standard_normal(4)
    q /= np.linalg.norm(q)
    return Quaternion.from_array(q)


def random_euler(rng) -> EulerAngles:
    margin = 0.01
    return EulerAngles(
        rng.uniform(-math.pi + margin, math.pi - margin),
        rng.uniform(-math.pi / 2 + margin, math.pi / 2 - margin),
        rng.uniform(margin, 2 * math.pi - margin),
    )


class TestFastAtan:
    def test_examples(self):
        assert fast_atan2(0.0, 1.0) == 0.0
        assert fast_atan2(1.0, 0.0) == pytest.approx(math.pi / 2, abs=1e-15)
        assert fast_atan2(-1.0, 0.0) == pytest.approx(math.pi / 2, abs=1e-15)
        np.testing.assert_allclose(fast_atan2(np.array([-2.0, 3.0]), np.zeros(2)), [math.pi / 2] * 2, atol=1e-15)
        assert abs(fast_atan2(1.0, 1.0) - math.pi / 4) <= FAST_ATAN_MAX_ERROR

    def test_origin_is_a_domain_error(self):
        with pytest.raises(DomainError):
            fast_atan2(0.0, 0.0)
        with pytest.raises(DomainError):
            fast_atan2(np.zeros(3), np.zeros(3))

    def test_max_error_sweep_is_locked(self):
        theta = np.linspace(-np.pi / 2, np.pi / 2, 1_000_001)[1:]
        c1, c2 = np.sin(theta), np.cos(theta)
        err = np.max(np.abs(fast_atan2(c1, c2) - np.arctan2(c1, c2)))
        assert err == pytest.approx(FAST_ATAN_MAX_ERROR, abs=1e-12)

    def test_scalar_matches_vectorized(self, rng):
        c1, c2 = rng.standard_normal(200), rng.standard_normal(200)
        vec = fast_atan2(c1, c2)
        scal = np.array([fast_atan2(a, b) for a, b in zip(c1, c2)])
        np.testing.assert_allclose(vec, scal, rtol=0, atol=1e-15)

    def test_reduced_range(self, rng):
        c1, c2 = rng.standard_normal(1000), rng.standard_normal(1000)
        out = fast_atan2(c1, c2)
        assert np.all(np.abs(out) <= math.pi / 2 + 1e-12)
        np.testing.assert_allclose(out, np.arctan(c1 / c2), atol=FAST_ATAN_MAX_ERROR + 1e-15)

    def test_platform_atan2(self):
        assert platform_atan2(1.0, 2.0) == math.atan(0.5)
        assert platform_atan2(-3.0, 0.0) == math.pi / 2
        with pytest.raises(DomainError):
            platform_atan2(0.0, 0.0)


class TestQuaternion:
    def test_product_composes_dcms(self, rng):
        for _ in range(100):
            p, q = random_quat(rng), random_quat(rng)
            np.testing.assert_allclose(
                quat_to_dcm(quat_multiply(p, q)).m,
                quat_to_dcm(p).m @ quat_to_dcm(q).m,
                atol=1e-12,
            )

    def test_dcm_matches_scipy(self, rng):
        for _ in range(100):
            q = random_quat(rng)
            expected = Rotation.from_quat([q.q1, q.q2, q.q3, q.q0]).as_matrix()
            np.testing.assert_allclose(quat_to_dcm(q).m, expected, atol=1e-12)

    def test_dcm_to_quat_round_trip(self, rng):
        for _ in range(500):
            q = random_quat(rng)
            if q.q0 < 0:
                q = -q
            np.testing.assert_allclose(dcm_to_quat(quat_to_dcm(q)).as_array(), q.as_array(), atol=1e-12)

    @pytest.mark.parametrize("angle", [1e-6, 1e-3, 0.5, 3.0])
    def test_rotvec_matches_scipy(self, rng, angle):
        axis = rng.standard_normal(3)
        phi = axis / np.linalg.norm(axis) * angle
        expected = Rotation.from_rotvec(phi).as_matrix()
        np.testing.assert_allclose(quat_to_dcm(rotvec_to_quat(phi)).m, expected, atol=1e-12)
        np.testing.assert_allclose(quat_to_rotvec(rotvec_to_quat(phi)).as_array(), phi, atol=1e-12)

    def test_normalize_nearly_unit(self):
        q = Quaternion.from_array(np.array([1.0, 0.0, 0.0, 0.0]) * math.sqrt(1.001))
        assert abs(1.0 - quat_normalize(q).norm_sq) < 1e-6

    def test_normalize_exact_unit_unchanged(self):
        q = Quaternion(0.5, 0.5, 0.5, 0.5)
        assert quat_normalize(q) == q

    def test_normalize_outside_domain(self):
        with pytest.raises(QuaternionNormError):
            quat_normalize(Quaternion.from_array(np.array([1.0, 0.0, 0.0, 0.0]) * math.sqrt(1.2)))

    def test_rotation_angle_between(self):
        a = Quaternion.identity()
        b = rotvec_to_quat([0.0, 0.0, 0.3])
        assert rotation_angle_between(a, b) == pytest.approx(0.3, abs=1e-14)
        assert rotation_angle_between(b, -b) == pytest.approx(0.0, abs=1e-14)

    def test_rotate_and_conjugate(self, rng):
        q = random_quat(rng)
        v = rng.standard_normal(3)
        np.testing.assert_allclose(quat_rotate(q, v), Rotation.from_quat(np.roll(q.as_array(), -1)).apply(v), atol=1e-12)
        np.testing.assert_allclose(quat_rotate(quat_conjugate(q), quat_rotate(q, v)), v, atol=1e-12)


class TestEuler:
    def test_dcm_matches_scipy(self, rng):
        for _ in range(100):
            e = random_euler(rng)
            expected = Rotation.from_euler("ZYX", [e.heading, e.pitch, e.roll]).as_matrix()
            np.testing.assert_allclose(euler_to_dcm(e).m, expected, atol=1e-12)

    def test_quat_matches_dcm(self, rng):
        for _ in range(100):
            e = random_euler(rng)
            np.testing.assert_allclose(quat_to_dcm(euler_to_quat(e)).m, euler_to_dcm(e).m, atol=1e-12)

    def test_round_trip_with_platform_atan(self, rng):
        for _ in range(10_000):
            e = random_euler(rng)
            C = euler_to_dcm(e)
            assert C.orthonormality_error() < 1e-12
            back = dcm_to_euler(C, fast_atan=False)
            np.testing.assert_allclose(back.as_array(), e.as_array(), atol=1e-9)

    def test_round_trip_with_fast_atan(self, rng):
        for _ in range(1000):
            e = random_euler(rng)
            back = dcm_to_euler(euler_to_dcm(e))
            np.testing.assert_allclose(back.as_array(), e.as_array(), atol=2 * FAST_ATAN_MAX_ERROR)

    def test_roll_wraps_to_pi(self):
        e = dcm_to_euler(euler_to_dcm(EulerAngles(math.radians(179.0), 0.0, 0.0)), fast_atan=False)
        assert e.roll == pytest.approx(math.radians(179.0), abs=1e-12)
        e = dcm_to_euler(euler_to_dcm(EulerAngles(math.radians(-179.0), 0.0, 0.0)), fast_atan=False)
        assert e.roll == pytest.approx(math.radians(-179.0), abs=1e-12)

    def test_heading_in_zero_two_pi(self):
        e = dcm_to_euler(euler_to_dcm(EulerAngles(0.0, 0.0, -0.5)), fast_atan=False)
        assert e.heading == pytest.approx(2 * math.pi - 0.5, abs=1e-12)

    def test_gimbal_lock_clamps_pitch(self):
        c = 1.0000002
        C = Dcm(np.array([[0.0, 0.0, c], [0.0, 1.0, 0.0], [-c, 0.0, 0.0]]))
        e = dcm_to_euler(C)
        assert e.pitch == math.pi / 2
        assert e.roll == 0.0
        assert e.heading == 0.0
        assert math.copysign(1.0, e.heading) == 1.0

        C = Dcm(np.array([[0.0, 0.0, -c], [0.0, 1.0, 0.0], [c, 0.0, 0.0]]))
        assert dcm_to_euler(C).pitch == -math.pi / 2

    def test_wraps(self):
        assert wrap_pi(3 * math.pi / 2) == pytest.approx(-math.pi / 2)
        assert wrap_pi(-math.pi) == pytest.approx(math.pi)
        assert wrap_two_pi(-math.pi / 2) == pytest.approx(3 * math.pi / 2)
        assert wrap_two_pi(2 * math.pi) == 0.0
        assert math.copysign(1.0, wrap_two_pi(-0.0)) == 1.0

    @pytest.mark.parametrize("fast", [True, False])
    def test_heading_on_the_west_axis(self, fast):
        C = Dcm(np.array([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 1.0]]))
        e = dcm_to_euler(C, fast_atan=fast)
        assert e.heading == pytest.approx(3 * math.pi / 2, abs=1e-12)
        assert e.roll == 0.0
        assert e.pitch == 0.0


class TestFrames:
    def test_cne_at_origin(self):
        expected = np.array([[0.0, 0.0, -1.0], [0.0, 1.0, 0.0], [1.0, 0.0, 0.0]])
        np.testing.assert_allclose(cne(0.0, 0.0).m, expected, atol=1e-15)

    def test_cne_orthonormal(self, rng):
        for _ in range(200):
            C = cne(rng.uniform(-1.5, 1.5), rng.uniform(-math.pi, math.pi))
            assert C.orthonormality_error() < 1e-14
            assert np.linalg.det(C.m) == pytest.approx(1.0, abs=1e-14)

    def test_transport_rate(self, earth):
        np.testing.assert_allclose(transport_rate(0.0, 0.0, earth.R, earth), [1.0, 0.0, 0.0], atol=1e-15)
        np.testing.assert_allclose(transport_rate(0.0, earth.R, 0.0, earth), [0.0, -1.0, 0.0], atol=1e-15)

    def test_inertial_rate_adds_earth_rate(self, earth):
        lat = math.radians(30.0)
        at_rest = inertial_rate(lat, 0.0, 0.0, earth)
        np.testing.assert_allclose(at_rest, earth.omega_e * np.array([math.cos(lat), 0.0, -math.sin(lat)]), atol=1e-18)
        moving = inertial_rate(lat, 3.0, 4.0, earth)
        np.testing.assert_allclose(moving - at_rest, transport_rate(lat, 3.0, 4.0, earth), atol=1e-18)
