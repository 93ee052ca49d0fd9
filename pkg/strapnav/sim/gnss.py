"""GNSS fix synthesis with noise and receiver time skew."""

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np
import pandas as pd
from numpy.typing import NDArray

from strapnav.models.gnss import GnssFix
from strapnav.models.nav_state import EarthModel
from strapnav.utils.errors import ConfigError
from .specs import GnssSpec
from .trajectory import Truth

GNSS_COLUMNS = ["t", "lat", "lon", "h", "vn", "ve", "vd"]


@dataclass(frozen=True, eq=False)
class GnssLog:
    """Fixes in time order; `t` carries the receiver timestamp (truth time + skew)."""

    t: NDArray[np.float64]
    lat: NDArray[np.float64]
    lon: NDArray[np.float64]
    h: NDArray[np.float64]
    vel: NDArray[np.float64]

    def __len__(self) -> int:
        return len(self.t)

    def fixes(self) -> Iterator[GnssFix]:
        for k in range(len(self.t)):
            v_n, v_e, v_d = (float(c) for c in self.vel[k])
            yield GnssFix(float(self.t[k]), float(self.lat[k]), float(self.lon[k]), float(self.h[k]), v_n, v_e, v_d)

    def to_frame(self) -> pd.DataFrame:
        data = np.column_stack([self.t, self.lat, self.lon, self.h, self.vel])
        return pd.DataFrame(data, columns=GNSS_COLUMNS)

    @classmethod
    def from_frame(cls, df: pd.DataFrame) -> "GnssLog":
        return cls(
            t=df["t"].to_numpy(float),
            lat=df["lat"].to_numpy(float),
            lon=df["lon"].to_numpy(float),
            h=df["h"].to_numpy(float),
            vel=df[["vn", "ve", "vd"]].to_numpy(float),
        )


def fix_indices(truth: Truth, rate: float) -> NDArray[np.intp]:
    """Truth epochs at which fixes are taken; the l-rate must be a multiple of the fix rate."""
    step = truth.l_rate / rate
    if abs(step - round(step)) > 1e-9 or round(step) < 1:
        raise ConfigError(f"l_rate {truth.l_rate:g} Hz is not a multiple of the GNSS rate {rate:g} Hz")
    step = int(round(step))
    return np.arange(step, len(truth.t), step)


def gen_gnss(
    truth: Truth,
    spec: GnssSpec,
    rng: Optional[np.random.Generator] = None,
    earth: Optional[EarthModel] = None,
) -> GnssLog:
    rng = rng if rng is not None else np.random.default_rng(spec.seed)
    earth = earth or EarthModel()
    idx = fix_indices(truth, spec.rate)
    n = len(idx)

    pos_sigma = np.asarray(spec.pos_sigma, dtype=float)
    pos_noise = rng.standard_normal((n, 3)) * pos_sigma
    vel_noise = rng.standard_normal((n, 3)) * np.asarray(spec.vel_sigma, dtype=float)

    lat = truth.lat[idx]
    return GnssLog(
        t=truth.t[idx] + spec.skew,
        lat=lat + pos_noise[:, 0] / earth.R,
        lon=truth.lon[idx] + pos_noise[:, 1] / (earth.R * np.cos(lat)),
        h=truth.alt[idx] + pos_noise[:, 2],
        vel=truth.vel[idx] + vel_noise,
    )
