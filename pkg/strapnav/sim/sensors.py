"""Sensor-error corruption of truth rates and specific forces."""

import math
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np
import pandas as pd
from numpy.typing import NDArray
from scipy.signal import lfilter

from strapnav.imu.types import RawImuSample
from strapnav.utils.logger import get_logger
from strapnav.utils.units import arw_to_si, dph_to_radps, rrw_to_si
from .specs import SensorErrorSpec
from .trajectory import Truth

logger = get_logger("sim")

IMU_COLUMNS = ["t", "wx", "wy", "wz", "fx", "fy", "fz"]


@dataclass(frozen=True, eq=False)
class ImuLog:
    """IMU rows: row k covers (t[k] - dT, t[k]]."""

    t: NDArray[np.float64]
    w: NDArray[np.float64]
    f: NDArray[np.float64]
    dT: float

    def __len__(self) -> int:
        return len(self.t)

    def samples(self) -> Iterator[RawImuSample]:
        for w, f in zip(self.w, self.f):
            yield RawImuSample.from_arrays(w, f, self.dT)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(np.column_stack([self.t, self.w, self.f]), columns=IMU_COLUMNS)


def gauss_markov(
    rng: np.random.Generator,
    sigma: NDArray[np.float64],
    tau: float,
    dT: float,
    n: int,
) -> NDArray[np.float64]:
    """First-order Gauss-Markov sequence started from its stationary distribution."""
    a = math.exp(-dT / tau)
    b = sigma * math.sqrt(1.0 - a * a)
    x0 = sigma * rng.standard_normal(3)
    drive = rng.standard_normal((n, 3)) * b
    out, _ = lfilter([1.0], [1.0, -a], drive, axis=0, zi=(a * x0)[None, :])
    return out


def random_walk(rng: np.random.Generator, k: NDArray[np.float64], dT: float, n: int) -> NDArray[np.float64]:
    """Integrated white noise with density k."""
    return np.cumsum(rng.standard_normal((n, 3)) * (k * math.sqrt(dT)), axis=0)


def _sensor_errors(
    rng: np.random.Generator,
    n: int,
    dT: float,
    bias: NDArray[np.float64],
    white_density: NDArray[np.float64],
    instability: NDArray[np.float64],
    tau: float,
    walk_density: NDArray[np.float64],
) -> NDArray[np.float64]:
    white = rng.standard_normal((n, 3)) * (white_density / math.sqrt(dT))
    return bias + white + gauss_markov(rng, instability, tau, dT, n) + random_walk(rng, walk_density, dT, n)


def corrupt_imu(truth: Truth, spec: SensorErrorSpec, rng: Optional[np.random.Generator] = None) -> ImuLog:
    """truth + constant bias + white noise + Gauss-Markov instability + random walk, per axis."""
    rng = rng if rng is not None else np.random.default_rng(spec.seed)
    n = len(truth.w)
    dT = truth.dT

    gyro = _sensor_errors(
        rng, n, dT,
        bias=dph_to_radps(np.asarray(spec.gyro_bias_dph)),
        white_density=arw_to_si(np.asarray(spec.gyro_arw)),
        instability=dph_to_radps(np.asarray(spec.gyro_bias_instability_dph)),
        tau=spec.gyro_bias_tau,
        walk_density=rrw_to_si(np.asarray(spec.gyro_rrw)),
    )
    accel = _sensor_errors(
        rng, n, dT,
        bias=np.asarray(spec.accel_bias, dtype=float),
        white_density=np.asarray(spec.accel_vrw, dtype=float),
        instability=np.asarray(spec.accel_bias_instability, dtype=float),
        tau=spec.accel_bias_tau,
        walk_density=np.asarray(spec.accel_rw, dtype=float),
    )
    logger.debug(f"Corrupted {n} IMU samples (seed {spec.seed})")
    return ImuLog(t=truth.t[1:].copy(), w=truth.w + gyro, f=truth.f + accel, dT=dT)
