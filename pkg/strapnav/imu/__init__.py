"""High-rate IMU preprocessing: debiasing, coning and sculling."""

from .types import RawImuSample, GyroBias, SensorBiases, ConingState, ScullingState
from .compensation import (
    debias_gyro,
    debias_accel,
    coning_step,
    coning_finalize,
    sculling_step,
    sculling_finalize,
)
from .compensator import IncrementCompensator, MIncrement

__all__ = [
    "RawImuSample",
    "GyroBias",
    "SensorBiases",
    "ConingState",
    "ScullingState",
    "debias_gyro",
    "debias_accel",
    "coning_step",
    "coning_finalize",
    "sculling_step",
    "sculling_finalize",
    "IncrementCompensator",
    "MIncrement",
]
