import math

import numpy as np
import pytest

from strapnav.geom import quat_multiply, rotvec_to_quat
from strapnav.models.attitude import Quaternion
from strapnav.sim import (
    GnssLog,
    GnssSpec,
    SensorErrorSpec,
    TrajectorySpec,
    corrupt_imu,
    fix_indices,
    gauss_markov,
    gen_gnss,
    gen_truth,
    run_monte_carlo,
)
from strapnav.utils.errors import ConfigError

G = 9.80665


def angle_diff(a, b):
    return np.angle(np.exp(1j * (np.asarray(a) - np.asarray(b))))


class TestSpecs:
    def test_scalar_expands_to_vector(self):
        spec = SensorErrorSpec.from_dict({"gyro_arw": "0.1"})
        assert spec.gyro_arw == (0.1, 0.1, 0.1)

    def test_three_values(self):
        spec = GnssSpec.from_dict({"pos_sigma": "1, 2, 3"})
        assert spec.pos_sigma == (1.0, 2.0, 3.0)

    def test_two_values_rejected(self):
        with pytest.raises(ConfigError):
            GnssSpec.from_dict({"vel_sigma": "1,2"})

    def test_unknown_key(self):
        with pytest.raises(ConfigError, match="unknown key"):
            TrajectorySpec.from_dict({"kind": "stationary", "wobble": "3"})

    def test_unsupported_kind(self):
        with pytest.raises(ConfigError, match="unsupported trajectory kind"):
            TrajectorySpec.from_dict({"kind": "figure-eight"})

    def test_kind_alias(self):
        assert TrajectorySpec.from_dict({"kind": "constant-rate-rotation"}).kind == "rotation"

    @pytest.mark.parametrize("entries", [{"l_rate": "-1"}, {"duration": "0"}, {"lat_deg": "89.5"}])
    def test_invalid_values(self, entries):
        with pytest.raises(ConfigError):
            TrajectorySpec.from_dict(entries)

    def test_negative_noise(self):
        with pytest.raises(ConfigError):
            SensorErrorSpec.from_dict({"accel_vrw": "-0.1"})

    def test_from_kv_file(self, spec_file):
        path = spec_file("traj.cfg", {"kind": "rotation", "rate_dps": 5, "duration": 2, "axis": "0,0,1"})
        spec = TrajectorySpec.from_kv_file(path)
        assert spec.kind == "rotation"
        assert spec.rate_dps == 5.0
        assert spec.n_samples == 2000


class TestTruth:
    def test_stationary(self):
        truth = gen_truth(TrajectorySpec(kind="stationary", duration=1.0, l_rate=100.0))
        assert len(truth) == 101
        np.testing.assert_array_equal(truth.w, np.zeros((100, 3)))
        np.testing.assert_allclose(truth.f, np.tile([0.0, 0.0, -G], (100, 1)), atol=1e-12)
        np.testing.assert_array_equal(truth.vel, np.zeros((101, 3)))
        assert np.all(truth.lat == truth.lat[0])

    def test_yaw_rotation_heading(self):
        truth = gen_truth(TrajectorySpec(kind="rotation", duration=9.0, l_rate=100.0, rate_dps=10.0))
        expected = np.radians(10.0 * truth.t)
        np.testing.assert_allclose(angle_diff(truth.euler[:, 2], expected), 0.0, atol=1e-9)
        assert math.degrees(truth.euler[-1, 2]) == pytest.approx(90.0, abs=1e-9)
        assert np.all((truth.euler[:, 2] >= 0.0) & (truth.euler[:, 2] < 2 * math.pi))

    def test_rotation_composes_from_rates(self):
        truth = gen_truth(TrajectorySpec(kind="rotation", duration=1.0, l_rate=50.0, axis=(1.0, 2.0, -1.0)))
        for k in range(1, len(truth)):
            q_prev = Quaternion.from_array(truth.quat[k - 1])
            q = quat_multiply(q_prev, rotvec_to_quat(truth.w[k - 1] * truth.dT))
            sign = 1.0 if q.q0 >= 0 else -1.0
            np.testing.assert_allclose(sign * q.as_array(), truth.quat[k], atol=1e-12)

    def test_coning_drift(self):
        spec = TrajectorySpec(kind="coning", duration=5.0, l_rate=1000.0, amplitude=0.02, frequency=10.0)
        truth = gen_truth(spec)
        drift = truth.w[:, 2].sum() * truth.dT / spec.duration
        assert drift == pytest.approx(-spec.frequency * (1 - math.cos(spec.amplitude)), rel=1e-9)
        assert drift == pytest.approx(-0.5 * spec.amplitude ** 2 * spec.frequency, rel=1e-3)

        # attitude itself is periodic, only the integrated rates drift
        k = int(round(2 * math.pi / spec.frequency * 3 * spec.l_rate))
        np.testing.assert_allclose(truth.quat[k], truth.quat[0], atol=1e-3)

    def test_circular(self):
        # 60 s lap
        spec = TrajectorySpec(kind="circular", duration=60.0, l_rate=100.0, radius=300.0 / math.pi, speed=10.0)
        rate = math.pi / 30.0
        truth = gen_truth(spec)
        np.testing.assert_allclose(np.linalg.norm(truth.vel, axis=1), 10.0, rtol=1e-12)
        np.testing.assert_allclose(truth.w, np.tile([0.0, 0.0, rate], (len(truth.w), 1)), atol=1e-12)
        np.testing.assert_allclose(truth.f, np.tile([0.0, 10.0 * rate, -G], (len(truth.f), 1)), atol=1e-9)
        assert truth.lat[-1] == pytest.approx(truth.lat[0], abs=1e-9)
        assert truth.lon[-1] == pytest.approx(truth.lon[0], abs=1e-9)

    def test_accelerate(self):
        spec = TrajectorySpec(
            kind="accelerate", duration=10.0, l_rate=100.0, accel=(2.0, 0.0, 0.0), accel_start=1.0, accel_duration=3.0
        )
        truth = gen_truth(spec)
        np.testing.assert_allclose(truth.vel[-1], [6.0, 0.0, 0.0], atol=1e-12)
        inside = (truth.t[1:] > 1.0) & (truth.t[1:] <= 4.0)
        np.testing.assert_allclose(truth.f[inside, 0], 2.0, atol=1e-9)
        np.testing.assert_allclose(truth.f[~inside, 0], 0.0, atol=1e-9)
        d_n = (truth.lat[-1] - truth.lat[0]) * 6.37e6
        assert d_n == pytest.approx(0.5 * 2.0 * 9.0 + 6.0 * 6.0, rel=1e-9)

    def test_sculling_velocity_oscillates(self):
        spec = TrajectorySpec(kind="sculling", duration=1.0, l_rate=1000.0, frequency=2 * math.pi)
        truth = gen_truth(spec)
        np.testing.assert_allclose(truth.vel[-1], truth.vel[0], atol=1e-12)

    def test_frame(self):
        frame = gen_truth(TrajectorySpec(duration=1.0, l_rate=10.0)).to_frame()
        assert list(frame.columns) == ["t", "lat", "lon", "h", "vn", "ve", "vd", "roll", "pitch", "heading"]
        assert len(frame) == 11


class TestSensors:
    @pytest.fixture(scope="class")
    def truth(self):
        return gen_truth(TrajectorySpec(kind="stationary", duration=10.0, l_rate=100.0))

    def test_zero_errors_reproduce_truth(self, truth):
        imu = corrupt_imu(truth, SensorErrorSpec())
        np.testing.assert_array_equal(imu.w, truth.w)
        np.testing.assert_array_equal(imu.f, truth.f)
        np.testing.assert_array_equal(imu.t, truth.t[1:])

    def test_constant_bias(self, truth):
        imu = corrupt_imu(truth, SensorErrorSpec(gyro_bias_dph=(360.0, 0.0, 0.0), accel_bias=(0.0, 0.0, 0.05)))
        np.testing.assert_allclose(imu.w[:, 0], math.radians(0.1), rtol=1e-12)
        np.testing.assert_allclose(imu.f[:, 2], -G + 0.05, rtol=1e-12)

    def test_deterministic(self, truth):
        spec = SensorErrorSpec(gyro_arw=(0.1, 0.1, 0.1), accel_vrw=(1e-3, 1e-3, 1e-3), seed=7)
        a, b = corrupt_imu(truth, spec), corrupt_imu(truth, spec)
        np.testing.assert_array_equal(a.w, b.w)
        np.testing.assert_array_equal(a.f, b.f)
        c = corrupt_imu(truth, SensorErrorSpec(gyro_arw=(0.1, 0.1, 0.1), seed=8))
        assert not np.array_equal(a.w, c.w)

    def test_angle_random_walk_variance(self):
        # disjoint 100 s windows over three axes and 200 seeds
        truth = gen_truth(TrajectorySpec(kind="stationary", duration=500.0, l_rate=10.0))
        arw = 0.1
        window = 1000

        def integrated_angles(seed):
            imu = corrupt_imu(truth, SensorErrorSpec(gyro_arw=(arw, arw, arw), seed=seed))
            angles = np.cumsum(imu.w * truth.dT, axis=0)
            ends = angles[window - 1::window]
            starts = np.vstack([np.zeros(3), ends[:-1]])
            return (ends - starts).ravel()

        samples = np.concatenate(run_monte_carlo(integrated_angles, range(200)))
        expected = (math.radians(arw) / 60.0) ** 2 * 100.0
        assert np.var(samples) == pytest.approx(expected, rel=0.1)

    def test_gauss_markov_stationary_variance(self, rng):
        x = gauss_markov(rng, np.array([1.0, 2.0, 0.5]), tau=1.0, dT=0.1, n=200_000)
        np.testing.assert_allclose(x.std(axis=0), [1.0, 2.0, 0.5], rtol=0.05)

    def test_samples(self, truth):
        imu = corrupt_imu(truth, SensorErrorSpec())
        first = next(imu.samples())
        assert first.dT == pytest.approx(0.01)
        np.testing.assert_array_equal(first.f, truth.f[0])


class TestGnss:
    @pytest.fixture(scope="class")
    def truth(self):
        return gen_truth(TrajectorySpec(kind="accelerate", duration=20.0, l_rate=100.0, accel_duration=100.0))

    def test_noise_free_fixes_equal_truth(self, truth):
        log = gen_gnss(truth, GnssSpec(pos_sigma=(0.0, 0.0, 0.0), vel_sigma=(0.0, 0.0, 0.0)))
        idx = fix_indices(truth, 1.0)
        assert len(log) == 20
        np.testing.assert_allclose(log.t, np.arange(1.0, 21.0), atol=1e-12)
        np.testing.assert_array_equal(log.lat, truth.lat[idx])
        np.testing.assert_array_equal(log.vel, truth.vel[idx])

    def test_skew_shifts_timestamps_only(self, truth):
        log = gen_gnss(truth, GnssSpec(pos_sigma=(0.0, 0.0, 0.0), vel_sigma=(0.0, 0.0, 0.0), skew=0.5))
        np.testing.assert_allclose(log.t, np.arange(1.5, 21.5), atol=1e-12)
        # velocity at the stamped time lags the truth at that time by a * skew
        np.testing.assert_allclose(log.vel[:, 0], log.t - 0.5, atol=1e-12)

    def test_velocity_noise(self):
        truth = gen_truth(TrajectorySpec(kind="stationary", duration=1000.0, l_rate=10.0))
        log = gen_gnss(truth, GnssSpec(vel_sigma=(0.1, 0.1, 0.1), seed=3))
        np.testing.assert_allclose((log.vel - truth.vel[fix_indices(truth, 1.0)]).std(axis=0), 0.1, rtol=0.1)

    def test_rate_must_divide_l_rate(self, truth):
        with pytest.raises(ConfigError):
            gen_gnss(truth, GnssSpec(rate=3.0))

    def test_frame_round_trip(self, truth):
        log = gen_gnss(truth, GnssSpec(seed=1))
        back = GnssLog.from_frame(log.to_frame())
        np.testing.assert_array_equal(back.vel, log.vel)
        fix = next(back.fixes())
        assert fix.t == log.t[0]
