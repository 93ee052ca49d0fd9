"""Strapdown mechanization at the m-rate."""

import math
from dataclasses import dataclass, replace

import numpy as np
from numpy.typing import ArrayLike, NDArray

from strapnav.geom import (
    earth_rate_ned,
    quat_multiply,
    quat_normalize,
    quat_to_dcm,
    transport_rate,
    wrap_pi,
)
from strapnav.models.attitude import Dcm, Quaternion
from strapnav.models.nav_state import EarthModel, NavState
from strapnav.utils.errors import PolarSingularityError
from strapnav.utils.logger import get_logger

logger = get_logger("mech")

# Above this the truncated update-quaternion series loses accuracy.
SMALL_ANGLE_LIMIT = 0.05

POLAR_GUARD = 1e-6


def check_latitude(lat: float) -> None:
    if abs(lat) >= math.pi / 2 - POLAR_GUARD:
        raise PolarSingularityError(f"latitude {math.degrees(lat):.6f}° too close to a pole")


def update_quaternion(dphi: ArrayLike) -> Quaternion:
    """Update quaternion dLambda from the series coefficients of the half-angle terms."""
    v = np.asarray(dphi, dtype=float)
    d2 = float(v @ v)
    d4 = d2 * d2
    s = 0.5 - d2 / 48.0 + d4 / 3840.0
    c = -d2 / 8.0 + d4 / 384.0
    return Quaternion(1.0 + c, s * v[0], s * v[1], s * v[2])


def rotate_attitude(q: Quaternion, phi: ArrayLike) -> Quaternion:
    """q <- normalize(q ⊗ dLambda(phi))."""
    phi = np.asarray(phi, dtype=float)
    angle = float(np.linalg.norm(phi))
    if angle >= SMALL_ANGLE_LIMIT:
        logger.warning(f"Attitude increment {angle:.4f} rad exceeds small-angle regime ({SMALL_ANGLE_LIMIT})")
    return quat_normalize(quat_multiply(q, update_quaternion(phi)))


def attitude_update(state: NavState, phi_m: ArrayLike) -> NavState:
    return replace(state, q=rotate_attitude(state.q, phi_m))


def transform_dv(C: Dcm, dv_body: ArrayLike, dT_m: float, earth: EarthModel) -> NDArray[np.float64]:
    """Rotate a body velocity increment to NED and remove sensed gravity."""
    dv_ned = C.m @ np.asarray(dv_body, dtype=float)
    dv_ned[2] += earth.g_bar * dT_m
    return dv_ned


def integrate_velocity(
    state: NavState,
    dv_ned: ArrayLike,
    dT_m: float = 0.0,
    earth: EarthModel = None,
    full_coriolis: bool = False,
) -> NavState:
    """v <- v + dv_ned, optionally minus (2 omega_ie + omega_en) x v dT."""
    v = state.v_ned
    v_new = v + np.asarray(dv_ned, dtype=float)
    if full_coriolis:
        omega = 2.0 * earth_rate_ned(state.lat, earth) + transport_rate(state.lat, state.v_n, state.v_e, earth)
        v_new = v_new - np.cross(omega, v) * dT_m
    return state.with_velocity(v_new)


def integrate_position(state: NavState, dT_m: float, earth: EarthModel) -> NavState:
    """Flat-rate latitude/longitude/altitude update on a sphere of radius R."""
    check_latitude(state.lat)
    lat = state.lat + state.v_n / earth.R * dT_m
    lon = wrap_pi(state.lon + state.v_e / (earth.R * math.cos(state.lat)) * dT_m)
    alt = state.alt - state.v_d * dT_m
    return state.with_position(lat, lon, alt)


@dataclass(frozen=True, eq=False)
class MechStepResult:
    """Mechanization output plus intermediates used by the error-state filter."""
    nav: NavState
    C: Dcm
    dv_ned: NDArray[np.float64]

    def specific_force_ned(self, dT_m: float, earth: EarthModel) -> NDArray[np.float64]:
        """Average NED specific force over the interval (gravity not removed)."""
        f = self.dv_ned / dT_m
        f[2] -= earth.g_bar
        return f


def mech_step_detailed(
    state: NavState,
    phi_m: ArrayLike,
    dv_m: ArrayLike,
    dT_m: float,
    earth: EarthModel,
    full_coriolis: bool = False,
) -> MechStepResult:
    nav = attitude_update(state, phi_m)
    C = quat_to_dcm(nav.q)
    dv_ned = transform_dv(C, dv_m, dT_m, earth)
    nav = integrate_velocity(nav, dv_ned, dT_m, earth, full_coriolis)
    nav = integrate_position(nav, dT_m, earth)
    return MechStepResult(nav=nav, C=C, dv_ned=dv_ned)


def mech_step(
    state: NavState,
    phi_m: ArrayLike,
    dv_m: ArrayLike,
    dT_m: float,
    earth: EarthModel,
    full_coriolis: bool = False,
) -> NavState:
    """attitude -> DCM -> velocity transform -> velocity -> position."""
    return mech_step_detailed(state, phi_m, dv_m, dT_m, earth, full_coriolis).nav
