"""IMU sample, bias and accumulator types."""

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray

from strapnav.utils.errors import DomainError


def _zeros() -> NDArray[np.float64]:
    return np.zeros(3)


@dataclass(frozen=True)
class RawImuSample:
    """One high-rate IMU sample: angular rate (rad/s), specific force (m/s^2), period (s)."""
    wx: float
    wy: float
    wz: float
    fx: float
    fy: float
    fz: float
    dT: float

    def __post_init__(self):
        if not self.dT > 0:
            raise DomainError(f"sample period must be positive, got {self.dT}")
        if not all(math.isfinite(v) for v in (self.wx, self.wy, self.wz, self.fx, self.fy, self.fz)):
            raise DomainError("non-finite IMU sample")

    @classmethod
    def from_arrays(cls, w: ArrayLike, f: ArrayLike, dT: float) -> "RawImuSample":
        wx, wy, wz = (float(v) for v in w)
        fx, fy, fz = (float(v) for v in f)
        return cls(wx, wy, wz, fx, fy, fz, float(dT))

    @property
    def w(self) -> NDArray[np.float64]:
        return np.array([self.wx, self.wy, self.wz])

    @property
    def f(self) -> NDArray[np.float64]:
        return np.array([self.fx, self.fy, self.fz])


@dataclass(frozen=True)
class GyroBias:
    """Estimated gyro biases (rad/s)."""
    bx: float = 0.0
    by: float = 0.0
    bz: float = 0.0

    @classmethod
    def from_array(cls, b: ArrayLike) -> "GyroBias":
        bx, by, bz = (float(v) for v in b)
        return cls(bx, by, bz)

    def as_array(self) -> NDArray[np.float64]:
        return np.array([self.bx, self.by, self.bz])


@dataclass(frozen=True)
class SensorBiases:
    """Gyro bias estimate plus the accelerometer z compensation.

    `accel_z` is added to the measured f_z, so a sensor bias b converges to -b.
    """
    gyro: GyroBias = field(default_factory=GyroBias)
    accel_z: float = 0.0


@dataclass(frozen=True, eq=False)
class ConingState:
    """Attitude accumulators over one m-interval."""
    alpha: NDArray[np.float64] = field(default_factory=_zeros)
    beta: NDArray[np.float64] = field(default_factory=_zeros)
    prev_dalpha: NDArray[np.float64] = field(default_factory=_zeros)


@dataclass(frozen=True, eq=False)
class ScullingState:
    """Velocity accumulators over one m-interval."""
    v: NDArray[np.float64] = field(default_factory=_zeros)
    dv_scul: NDArray[np.float64] = field(default_factory=_zeros)
    prev_dalpha: NDArray[np.float64] = field(default_factory=_zeros)
    prev_dv: NDArray[np.float64] = field(default_factory=_zeros)
