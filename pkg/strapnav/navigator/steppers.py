"""Per-filter adapters driven once per m-cycle by the Navigator."""

import math
from typing import Dict, Optional

import numpy as np
from scipy.spatial.transform import Rotation

from strapnav.altfilt import ComplementaryFilter, GradientDescentFilter, PiGains
from strapnav.config.run_config import RunConfig
from strapnav.eskf import STATE_LABELS, ErrorStateFilter, build_gnss_measurements
from strapnav.geom import dcm_to_euler, quat_to_dcm
from strapnav.imu import MIncrement, SensorBiases
from strapnav.mech import mech_step
from strapnav.models.attitude import Quaternion
from strapnav.models.gnss import GnssFix
from strapnav.models.nav_state import EarthModel, NavState

ESTIMATE_COLUMNS = (
    ["t", "lat", "lon", "h", "vn", "ve", "vd", "roll", "pitch", "heading", "bgx", "bgy", "bgz", "baz"]
    + [f"p_{label}" for label in STATE_LABELS]
)


class TruthLookup:
    """Truth attitude and heading at arbitrary epochs (nearest row)."""

    def __init__(self, truth):
        self.t = truth["t"].to_numpy(float)
        self.euler = truth[["roll", "pitch", "heading"]].to_numpy(float)
        self.rotation = Rotation.from_euler("ZYX", self.euler[:, ::-1])

    def index(self, t: float) -> int:
        k = int(np.searchsorted(self.t, t))
        if k >= len(self.t) or (k > 0 and t - self.t[k - 1] < self.t[k] - t):
            k -= 1
        return k

    def heading(self, t: float) -> float:
        return float(self.euler[self.index(t), 2])

    def to_body(self, t: float, v_nav) -> np.ndarray:
        return self.rotation[self.index(t)].inv().apply(v_nav)


class Stepper:
    """Common interface: consume one increment (and maybe a fix), report a row."""

    name = ""

    def __init__(self, nav: NavState, config: RunConfig, earth: EarthModel):
        self.nav = nav
        self.config = config
        self.earth = earth
        self.innovations: Optional[Dict[str, float]] = None

    @property
    def biases(self) -> SensorBiases:
        return SensorBiases()

    def step(self, inc: MIncrement, fix: Optional[GnssFix], t: float) -> None:
        raise NotImplementedError

    def _attitude(self, q: Quaternion):
        e = dcm_to_euler(quat_to_dcm(q), fast_atan=self.config.mech.fast_atan)
        return e.roll, e.pitch, e.heading

    def row(self, t: float) -> list:
        nav = self.nav
        return (
            [t, nav.lat, nav.lon, nav.alt, nav.v_n, nav.v_e, nav.v_d]
            + list(self._attitude(nav.q))
            + [math.nan] * (4 + len(STATE_LABELS))
        )


class InsStepper(Stepper):
    """Free-running mechanization; fixes are only compared, never applied."""

    name = "ins"

    def step(self, inc, fix, t):
        self.nav = mech_step(self.nav, inc.phi, inc.dv, inc.dT, self.earth, self.config.mech.full_coriolis)
        self.innovations = None
        if fix is not None:
            measurements = build_gnss_measurements(self.nav, fix, self.config.eskf, self.earth)
            self.innovations = {STATE_LABELS[m.index]: m.z for m in measurements}

    def row(self, t):
        row = super().row(t)
        row[10:14] = [0.0] * 4
        return row


class EskfStepper(Stepper):
    name = "eskf"

    def __init__(self, nav, config, earth):
        super().__init__(nav, config, earth)
        self.filter = ErrorStateFilter(nav, config.eskf, earth, full_coriolis=config.mech.full_coriolis)

    @property
    def biases(self) -> SensorBiases:
        return self.filter.biases

    def step(self, inc, fix, t):
        result = self.filter.step(inc, fix)
        self.nav = result.nav
        self.innovations = result.innovations

    def row(self, t):
        b = self.filter.biases
        return (
            super().row(t)[:10]
            + list(b.gyro.as_array()) + [b.accel_z]
            + list(np.diag(self.filter.P))
        )


class CompStepper(Stepper):
    """Complementary filter; heading reference from truth plus seeded noise."""

    name = "comp"

    def __init__(self, nav, config, earth, truth: TruthLookup):
        super().__init__(nav, config, earth)
        self.truth = truth
        self.filter = ComplementaryFilter(nav.q, PiGains(config.comp.kp, config.comp.ki), earth)
        self.rng = np.random.default_rng(config.seed)
        self.psi_noise = math.radians(config.comp.psi_ref_noise_deg)
        self.v_ref = nav.v_ned

    def step(self, inc, fix, t):
        if fix is not None:
            self.v_ref = fix.v_ned
        w = inc.phi / inc.dT
        f = inc.dv / inc.dT
        v_body = quat_to_dcm(self.filter.q).m.T @ self.v_ref
        psi_ref = self.truth.heading(t) + self.psi_noise * self.rng.standard_normal()
        self.filter.step(w, f, v_body, psi_ref, inc.dT)
        self.nav = self.nav.with_attitude(self.filter.q)

    def row(self, t):
        return (
            [t] + [math.nan] * 6
            + list(self._attitude(self.filter.q))
            + list(self.filter.state.bias_estimate) + [math.nan]
            + [math.nan] * len(STATE_LABELS)
        )


class GdStepper(Stepper):
    """Gradient-descent filter; magnetometer synthesised from the true attitude."""

    name = "gd"

    def __init__(self, nav, config, earth, truth: TruthLookup):
        super().__init__(nav, config, earth)
        self.truth = truth
        self.filter = GradientDescentFilter(nav.q, config.gd.beta, config.gd.mag_inclination_deg)

    def step(self, inc, fix, t):
        m_body = self.truth.to_body(t, self.filter.mag_ref)
        self.filter.step(inc.phi / inc.dT, inc.dv / inc.dT, m_body, inc.dT)
        self.nav = self.nav.with_attitude(self.filter.q)

    def row(self, t):
        return [t] + [math.nan] * 6 + list(self._attitude(self.filter.q)) + [math.nan] * (4 + len(STATE_LABELS))
