"""GNSS fix model."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray


@dataclass(frozen=True)
class GnssFix:
    """Position/velocity fix; `t` is the receiver timestamp (s)."""
    t: float
    lat: float
    lon: float
    h: float
    v_n: float
    v_e: float
    v_d: float

    @property
    def v_ned(self) -> NDArray[np.float64]:
        return np.array([self.v_n, self.v_e, self.v_d])
