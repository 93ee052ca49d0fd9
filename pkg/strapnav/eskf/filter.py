"""Error-state Kalman filter cycle and its stateful driver."""

import math
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np

from strapnav.config.run_config import EskfConfig
from strapnav.geom import wrap_pi
from strapnav.imu.compensator import MIncrement
from strapnav.imu.types import SensorBiases
from strapnav.mech import check_latitude, mech_step_detailed
from strapnav.models.gnss import GnssFix
from strapnav.models.nav_state import EarthModel, NavState
from strapnav.utils.logger import LoggerMixin
from strapnav.utils.units import dph_to_radps, to_si
from .correction import apply_corrections
from .covariance import propagate_covariance
from .transition import build_transition
from .types import STATE_LABELS, Cov13, ProcessNoise, ScalarMeasurement, zero_error_state
from .update import sequential_update


@dataclass(frozen=True, eq=False)
class KfCycleResult:
    nav: NavState
    P: Cov13
    biases: SensorBiases
    innovations: Optional[Dict[str, float]] = None


def initial_covariance(cfg: EskfConfig, lat: float, earth: Optional[EarthModel] = None) -> Cov13:
    """Diagonal P0 from the configured 1-sigma values."""
    earth = earth or EarthModel()
    sigma = np.array(
        [dph_to_radps(cfg.p0_gyro_bias_dph)] * 3
        + [cfg.p0_accel_bias]
        + [to_si(cfg.p0_tilt_deg, "deg")] * 3
        + [cfg.p0_vel] * 3
        + [cfg.p0_pos / earth.R, cfg.p0_pos / (earth.R * math.cos(lat)), cfg.p0_alt]
    )
    return np.diag(sigma ** 2)


def default_process_noise(cfg: EskfConfig, earth: Optional[EarthModel] = None) -> ProcessNoise:
    """Diagonal densities; horizontal position noise is converted to rad^2/s."""
    earth = earth or EarthModel()
    q_ang = cfg.q_pos / earth.R ** 2
    return ProcessNoise(
        (cfg.q_gyro_bias,) * 3
        + (cfg.q_accel_bias,)
        + (cfg.q_tilt,) * 3
        + (cfg.q_vel,) * 3
        + (q_ang, q_ang, cfg.q_pos)
    )


def build_gnss_measurements(
    nav: NavState,
    fix: GnssFix,
    cfg: EskfConfig,
    earth: Optional[EarthModel] = None,
) -> List[ScalarMeasurement]:
    """Six scalar observations, GNSS minus INS, with metre sigmas converted to radians."""
    earth = earth or EarthModel()
    check_latitude(nav.lat)
    var_v = cfg.gnss_vel_sigma ** 2
    return [
        ScalarMeasurement(7, fix.v_n - nav.v_n, var_v),
        ScalarMeasurement(8, fix.v_e - nav.v_e, var_v),
        ScalarMeasurement(9, fix.v_d - nav.v_d, var_v),
        ScalarMeasurement(10, fix.lat - nav.lat, (cfg.gnss_pos_sigma / earth.R) ** 2),
        ScalarMeasurement(
            11,
            wrap_pi(fix.lon - nav.lon),
            (cfg.gnss_pos_sigma / (earth.R * math.cos(nav.lat))) ** 2,
        ),
        ScalarMeasurement(12, fix.h - nav.alt, cfg.gnss_alt_sigma ** 2),
    ]


def kf_cycle(
    nav: NavState,
    P: Cov13,
    biases: SensorBiases,
    increment: MIncrement,
    gnss_fix: Optional[GnssFix] = None,
    cfg: Optional[EskfConfig] = None,
    earth: Optional[EarthModel] = None,
    process_noise: Optional[ProcessNoise] = None,
    full_coriolis: bool = False,
) -> KfCycleResult:
    """One m-cycle: mechanize, propagate P, then update and feed back if a fix is present."""
    cfg = cfg or EskfConfig()
    earth = earth or EarthModel()
    q = process_noise or default_process_noise(cfg, earth)
    dT = increment.dT

    step = mech_step_detailed(nav, increment.phi, increment.dv, dT, earth, full_coriolis)
    f_ned = step.specific_force_ned(dT, earth)
    T = build_transition(step.C, float(f_ned[0]), float(f_ned[1]), earth, step.nav.lat, dT)
    P = propagate_covariance(P, T, q, dT)
    nav = step.nav

    if gnss_fix is None:
        return KfCycleResult(nav=nav, P=P, biases=biases)

    measurements = build_gnss_measurements(nav, gnss_fix, cfg, earth)
    innovations = {STATE_LABELS[m.index]: m.z for m in measurements}
    P, x = sequential_update(P, zero_error_state(), measurements)
    nav, biases, _ = apply_corrections(nav, x, biases)
    return KfCycleResult(nav=nav, P=P, biases=biases, innovations=innovations)


class ErrorStateFilter(LoggerMixin):
    """Holds the filter state between kf_cycle calls."""

    def __init__(
        self,
        nav: NavState,
        cfg: Optional[EskfConfig] = None,
        earth: Optional[EarthModel] = None,
        biases: Optional[SensorBiases] = None,
        full_coriolis: bool = False,
    ):
        self.cfg = cfg or EskfConfig()
        self.earth = earth or EarthModel()
        self.nav = nav
        self.biases = biases or SensorBiases()
        self.full_coriolis = full_coriolis
        self.P = initial_covariance(self.cfg, nav.lat, self.earth)
        self.process_noise = default_process_noise(self.cfg, self.earth)
        self.innovations: Optional[Dict[str, float]] = None
        self.updates = 0

    def step(self, increment: MIncrement, fix: Optional[GnssFix] = None) -> KfCycleResult:
        result = kf_cycle(
            self.nav,
            self.P,
            self.biases,
            increment,
            fix,
            cfg=self.cfg,
            earth=self.earth,
            process_noise=self.process_noise,
            full_coriolis=self.full_coriolis,
        )
        self.nav, self.P, self.biases = result.nav, result.P, result.biases
        if result.innovations is not None:
            self.innovations = result.innovations
            self.updates += 1
            self.logger.debug(f"GNSS update {self.updates}: {self.nav}", extra={"epoch": fix.t})
        return result

    def sigma(self) -> Dict[str, float]:
        """1-sigma of each error state."""
        d = np.sqrt(np.clip(np.diag(self.P), 0.0, None))
        return {label: float(d[i]) for i, label in enumerate(STATE_LABELS)}
