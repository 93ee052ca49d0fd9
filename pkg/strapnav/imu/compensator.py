"""l-cycle driver producing compensated m-cycle increments."""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from numpy.typing import NDArray

from strapnav.utils.logger import LoggerMixin
from .compensation import (
    coning_finalize,
    coning_step,
    debias_accel,
    debias_gyro,
    sculling_finalize,
    sculling_step,
)
from .types import ConingState, RawImuSample, ScullingState, SensorBiases


@dataclass(frozen=True, eq=False)
class MIncrement:
    """Compensated increments over one m-interval."""
    phi: NDArray[np.float64]
    dv: NDArray[np.float64]
    dT: float
    n_samples: int
    partial: bool = False


class IncrementCompensator(LoggerMixin):
    """Feeds l-rate samples through the coning and sculling accumulators."""

    def __init__(
        self,
        l_per_m: int = 10,
        coning: bool = True,
        sculling: bool = True,
        rotation_compensation: bool = True,
    ):
        if l_per_m < 1:
            raise ValueError("l_per_m must be >= 1")
        self.l_per_m = l_per_m
        self.coning = coning
        self.sculling = sculling
        self.rotation_compensation = rotation_compensation
        self._reset()

    def _reset(self) -> None:
        self._coning = ConingState()
        self._sculling = ScullingState()
        self._dT = 0.0
        self._count = 0

    @property
    def pending(self) -> int:
        return self._count

    def push(self, sample: RawImuSample, biases: SensorBiases) -> Optional[MIncrement]:
        """Add one sample; returns an increment when the m-interval completes."""
        dalpha = debias_gyro(sample, biases.gyro)
        dv = debias_accel(sample, biases)
        self._sculling = sculling_step(self._sculling, dalpha, dv, self._coning)
        self._coning = coning_step(self._coning, dalpha)
        self._dT += sample.dT
        self._count += 1
        if self._count == self.l_per_m:
            return self._finalize(partial=False)
        return None

    def flush(self) -> Optional[MIncrement]:
        """Finalize a partial m-interval at end of stream."""
        if self._count == 0:
            return None
        self.logger.warning(
            f"Partial m-interval at end of stream: {self._count}/{self.l_per_m} samples"
        )
        return self._finalize(partial=True)

    def _finalize(self, partial: bool) -> MIncrement:
        alpha_m = self._coning.alpha
        phi, _ = coning_finalize(self._coning)
        dv, _ = sculling_finalize(self._sculling, alpha_m, self.rotation_compensation)
        if not self.coning:
            phi = alpha_m
        if not self.sculling:
            dv = dv - self._sculling.dv_scul
        increment = MIncrement(phi=phi, dv=dv, dT=self._dT, n_samples=self._count, partial=partial)
        self._reset()
        return increment
