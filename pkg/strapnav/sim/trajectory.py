"""Closed-form truth trajectories and interval-averaged IMU rates."""

import math
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

import numpy as np
import pandas as pd
from numpy.typing import NDArray
from scipy.spatial.transform import Rotation

from strapnav.geom import euler_to_quat
from strapnav.models.attitude import EulerAngles, Quaternion
from strapnav.models.nav_state import EarthModel, NavState
from strapnav.utils.errors import ConfigError
from strapnav.utils.logger import get_logger
from .specs import TrajectorySpec

logger = get_logger("sim")

GL_NODES, GL_WEIGHTS = np.polynomial.legendre.leggauss(4)

TRUTH_COLUMNS = ["t", "lat", "lon", "h", "vn", "ve", "vd", "roll", "pitch", "heading"]


def to_rotation(q: Quaternion) -> Rotation:
    return Rotation.from_quat([q.q1, q.q2, q.q3, q.q0])


def quat_array(r: Rotation) -> NDArray[np.float64]:
    """Scalar-first quaternions, sign chosen so q0 >= 0."""
    q = np.atleast_2d(r.as_quat())[:, [3, 0, 1, 2]]
    return np.where(q[:, :1] < 0, -q, q)


class _Kinematics:
    """Attitude, body rate and NED motion of one trajectory kind as functions of time."""

    def __init__(self, spec: TrajectorySpec, q0: Rotation):
        self.spec = spec
        self.q0 = q0
        self.v0 = np.asarray(spec.velocity, dtype=float)

    def rotation(self, t: NDArray[np.float64]) -> Rotation:
        return Rotation.from_quat(np.tile(self.q0.as_quat(), (len(t), 1)))

    def body_rate(self, t: NDArray[np.float64]) -> NDArray[np.float64]:
        return np.zeros((len(t), 3))

    def accel(self, t: NDArray[np.float64]) -> NDArray[np.float64]:
        return np.zeros((len(t), 3))

    def velocity(self, t: NDArray[np.float64]) -> NDArray[np.float64]:
        return np.tile(self.v0, (len(t), 1))

    def displacement(self, t: NDArray[np.float64]) -> NDArray[np.float64]:
        return np.outer(t, self.v0)

    def specific_force(self, t: NDArray[np.float64], g: float) -> NDArray[np.float64]:
        return self.rotation(t).inv().apply(self.accel(t) - np.array([0.0, 0.0, g]))

    def interval_means(
        self, t0: NDArray[np.float64], t1: NDArray[np.float64], g: float
    ) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
        """Mean body rate and specific force over each (t0, t1] by Gauss-Legendre quadrature."""
        mid = 0.5 * (t0 + t1)
        half = 0.5 * (t1 - t0)
        nodes = (mid[:, None] + half[:, None] * GL_NODES[None, :]).ravel()
        w = self.body_rate(nodes).reshape(len(t0), len(GL_NODES), 3)
        f = self.specific_force(nodes, g).reshape(len(t0), len(GL_NODES), 3)
        weights = 0.5 * GL_WEIGHTS[None, :, None]
        return (w * weights).sum(axis=1), (f * weights).sum(axis=1)


class _Stationary(_Kinematics):
    pass


class _Rotation(_Kinematics):
    def __init__(self, spec, q0):
        super().__init__(spec, q0)
        axis = np.asarray(spec.axis, dtype=float)
        self.omega = axis / np.linalg.norm(axis) * math.radians(spec.rate_dps)

    def rotation(self, t):
        return self.q0 * Rotation.from_rotvec(np.outer(t, self.omega))

    def body_rate(self, t):
        return np.tile(self.omega, (len(t), 1))


class _Coning(_Kinematics):
    """Body axis sweeping a cone of half-angle `amplitude` at `frequency`."""

    def __init__(self, spec, q0):
        super().__init__(spec, q0)
        self.a = spec.amplitude
        self.W = spec.frequency
        s, c = math.sin(0.5 * self.a), math.cos(0.5 * self.a)
        self.q_ref = self.q0 * Rotation.from_quat([s, 0.0, 0.0, c]).inv()

    def _cone(self, t):
        s, c = math.sin(0.5 * self.a), math.cos(0.5 * self.a)
        wt = self.W * t
        return Rotation.from_quat(np.column_stack([s * np.cos(wt), s * np.sin(wt), np.zeros_like(t), np.full_like(t, c)]))

    def rotation(self, t):
        return self.q_ref * self._cone(t)

    def body_rate(self, t):
        a, W = self.a, self.W
        wt = W * t
        return np.column_stack([
            -W * math.sin(a) * np.sin(wt),
            W * math.sin(a) * np.cos(wt),
            np.full_like(t, -W * (1.0 - math.cos(a))),
        ])


class _Sculling(_Kinematics):
    """In-phase angular oscillation about body x and linear oscillation along initial body y."""

    def __init__(self, spec, q0):
        super().__init__(spec, q0)
        self.A = spec.amplitude
        self.B = spec.accel_amplitude
        self.W = spec.frequency
        self.u = self.q0.apply([0.0, 1.0, 0.0])

    def rotation(self, t):
        theta = self.A * np.sin(self.W * t)
        return self.q0 * Rotation.from_rotvec(np.outer(theta, [1.0, 0.0, 0.0]))

    def body_rate(self, t):
        w = np.zeros((len(t), 3))
        w[:, 0] = self.A * self.W * np.cos(self.W * t)
        return w

    def accel(self, t):
        return np.outer(self.B * np.sin(self.W * t), self.u)

    def velocity(self, t):
        return self.v0 + np.outer(self.B * (1.0 - np.cos(self.W * t)) / self.W, self.u)

    def displacement(self, t):
        W = self.W
        return np.outer(t, self.v0) + np.outer(self.B * (t - np.sin(W * t) / W) / W, self.u)


class _Circular(_Kinematics):
    """Constant-speed level turn; roll and pitch held at their initial values."""

    def __init__(self, spec, q0):
        super().__init__(spec, q0)
        self.V = spec.speed
        self.psi0 = math.radians(spec.heading_deg)
        self.psi_dot = spec.speed / spec.radius
        self.q_rp = to_rotation(euler_to_quat(EulerAngles(math.radians(spec.roll_deg), math.radians(spec.pitch_deg), 0.0)))
        self.w_body = self.q_rp.inv().apply([0.0, 0.0, self.psi_dot])

    def _psi(self, t):
        return self.psi0 + self.psi_dot * t

    def rotation(self, t):
        return Rotation.from_rotvec(np.outer(self._psi(t), [0.0, 0.0, 1.0])) * self.q_rp

    def body_rate(self, t):
        return np.tile(self.w_body, (len(t), 1))

    def accel(self, t):
        psi = self._psi(t)
        k = self.V * self.psi_dot
        return np.column_stack([-k * np.sin(psi), k * np.cos(psi), np.zeros_like(t)])

    def velocity(self, t):
        psi = self._psi(t)
        return np.column_stack([self.V * np.cos(psi), self.V * np.sin(psi), np.zeros_like(t)])

    def displacement(self, t):
        psi = self._psi(t)
        rho = self.V / self.psi_dot
        return np.column_stack([
            rho * (np.sin(psi) - math.sin(self.psi0)),
            -rho * (np.cos(psi) - math.cos(self.psi0)),
            np.zeros_like(t),
        ])


class _Accelerate(_Kinematics):
    """Constant NED acceleration inside [accel_start, accel_start + accel_duration)."""

    def __init__(self, spec, q0):
        super().__init__(spec, q0)
        self.a = np.asarray(spec.accel, dtype=float)
        self.start = spec.accel_start
        self.stop = spec.accel_start + spec.accel_duration

    def _elapsed(self, t):
        return np.clip(t - self.start, 0.0, self.stop - self.start)

    def accel(self, t):
        inside = (t >= self.start) & (t < self.stop)
        return np.outer(inside.astype(float), self.a)

    def velocity(self, t):
        return self.v0 + np.outer(self._elapsed(t), self.a)

    def displacement(self, t):
        u = np.clip(t - self.start, 0.0, None)
        d = self.stop - self.start
        ramp = np.where(u <= d, 0.5 * u * u, 0.5 * d * d + d * (u - d))
        return np.outer(t, self.v0) + np.outer(ramp, self.a)

    def interval_means(self, t0, t1, g):
        # Piecewise-constant acceleration: exact overlap average
        overlap = np.clip(np.minimum(t1, self.stop) - np.maximum(t0, self.start), 0.0, None)
        a_mean = np.outer(overlap / (t1 - t0), self.a)
        f = self.q0.inv().apply(a_mean - np.array([0.0, 0.0, g]))
        return np.zeros_like(f), f


_KINDS = {
    "stationary": _Stationary,
    "rotation": _Rotation,
    "coning": _Coning,
    "sculling": _Sculling,
    "circular": _Circular,
    "accelerate": _Accelerate,
}


@dataclass(frozen=True, eq=False)
class Truth:
    """Truth at every l-epoch t[0..N]; w and f are interval means over (t[k-1], t[k]]."""

    t: NDArray[np.float64]
    quat: NDArray[np.float64]
    vel: NDArray[np.float64]
    lat: NDArray[np.float64]
    lon: NDArray[np.float64]
    alt: NDArray[np.float64]
    euler: NDArray[np.float64]
    w: NDArray[np.float64]
    f: NDArray[np.float64]
    l_rate: float

    def __len__(self) -> int:
        return len(self.t)

    @property
    def dT(self) -> float:
        return 1.0 / self.l_rate

    def nav_state(self, k: int) -> NavState:
        v_n, v_e, v_d = (float(c) for c in self.vel[k])
        return NavState(
            lat=float(self.lat[k]),
            lon=float(self.lon[k]),
            alt=float(self.alt[k]),
            v_n=v_n,
            v_e=v_e,
            v_d=v_d,
            q=Quaternion.from_array(self.quat[k]),
        )

    def __iter__(self) -> Iterator[Tuple[float, NavState, NDArray[np.float64], NDArray[np.float64]]]:
        for k in range(1, len(self.t)):
            yield float(self.t[k]), self.nav_state(k), self.w[k - 1], self.f[k - 1]

    def to_frame(self) -> pd.DataFrame:
        data = np.column_stack([self.t, self.lat, self.lon, self.alt, self.vel, self.euler])
        return pd.DataFrame(data, columns=TRUTH_COLUMNS)


def _wrap(angle: NDArray[np.float64]) -> NDArray[np.float64]:
    return np.arctan2(np.sin(angle), np.cos(angle))


def gen_truth(spec: TrajectorySpec, earth: Optional[EarthModel] = None) -> Truth:
    """Sample a trajectory at the l-rate on a flat, constant-radius Earth."""
    errors = spec.validate()
    if errors:
        raise ConfigError("; ".join(errors))
    earth = earth or EarthModel()

    e0 = EulerAngles(math.radians(spec.roll_deg), math.radians(spec.pitch_deg), math.radians(spec.heading_deg))
    kin = _KINDS[spec.kind](spec, to_rotation(euler_to_quat(e0)))

    n = spec.n_samples
    t = np.arange(n + 1) / spec.l_rate
    r = kin.rotation(t)
    w, f = kin.interval_means(t[:-1], t[1:], earth.g_bar)

    lat0, lon0 = math.radians(spec.lat_deg), math.radians(spec.lon_deg)
    d = kin.displacement(t)
    heading, pitch, roll = r.as_euler("ZYX").T
    heading = np.mod(heading, 2.0 * math.pi)
    # tiny negative headings round up to exactly 2pi under mod
    heading[heading >= 2.0 * math.pi] = 0.0

    truth = Truth(
        t=t,
        quat=quat_array(r),
        vel=kin.velocity(t),
        lat=lat0 + d[:, 0] / earth.R,
        lon=_wrap(lon0 + d[:, 1] / (earth.R * math.cos(lat0))),
        alt=spec.alt - d[:, 2],
        euler=np.column_stack([roll, pitch, heading]),
        w=w,
        f=f,
        l_rate=spec.l_rate,
    )
    logger.debug(f"Generated {spec.kind} truth: {n} samples at {spec.l_rate:g} Hz")
    return truth
