"""Navigation state and Earth model."""

import math
from dataclasses import dataclass, field, replace

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .attitude import Quaternion


@dataclass(frozen=True)
class EarthModel:
    """Spherical, constant-gravity Earth."""
    R: float = 6.37e6
    g_bar: float = 9.80665
    omega_e: float = 7.292115e-5

    def __post_init__(self):
        for name in ("R", "g_bar", "omega_e"):
            if not getattr(self, name) > 0:
                raise ValueError(f"EarthModel.{name} must be positive")


@dataclass(frozen=True)
class NavState:
    """Total-state navigation solution."""

    # Position
    lat: float = 0.0
    lon: float = 0.0
    alt: float = 0.0

    # NED velocity
    v_n: float = 0.0
    v_e: float = 0.0
    v_d: float = 0.0

    # Attitude, body->nav
    q: Quaternion = field(default_factory=Quaternion.identity)

    @property
    def v_ned(self) -> NDArray[np.float64]:
        return np.array([self.v_n, self.v_e, self.v_d])

    @property
    def position(self) -> NDArray[np.float64]:
        return np.array([self.lat, self.lon, self.alt])

    def with_velocity(self, v: ArrayLike) -> "NavState":
        v_n, v_e, v_d = (float(c) for c in v)
        return replace(self, v_n=v_n, v_e=v_e, v_d=v_d)

    def with_position(self, lat: float, lon: float, alt: float) -> "NavState":
        return replace(self, lat=float(lat), lon=float(lon), alt=float(alt))

    def with_attitude(self, q: Quaternion) -> "NavState":
        return replace(self, q=q)

    def __str__(self) -> str:
        return (
            f"lat={math.degrees(self.lat):.7f}° lon={math.degrees(self.lon):.7f}° "
            f"h={self.alt:.3f} m v=({self.v_n:.4f}, {self.v_e:.4f}, {self.v_d:.4f}) m/s"
        )
