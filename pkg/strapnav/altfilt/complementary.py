"""PI-feedback complementary attitude filter."""

from dataclasses import replace
from typing import Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from strapnav.geom import dcm_to_euler, quat_to_dcm, rot_x, rot_y, rot_z
from strapnav.mech import rotate_attitude
from strapnav.models.attitude import Quaternion
from strapnav.models.nav_state import EarthModel
from strapnav.utils.errors import ContractViolation
from strapnav.utils.logger import LoggerMixin
from .types import CompFilterState, PiGains

# Gravity references shorter than this fraction of g are not used for tilt.
MIN_GRAVITY_FRACTION = 0.1


def gravity_reference(w_gyro: ArrayLike, v_ref_body: ArrayLike, f_accel: ArrayLike) -> NDArray[np.float64]:
    """Centripetally corrected gravity in body axes: w x v - f."""
    w = np.asarray(w_gyro, dtype=float)
    v = np.asarray(v_ref_body, dtype=float)
    return np.cross(w, v) - np.asarray(f_accel, dtype=float)


def attitude_error(
    q_est: Quaternion,
    psi_ref: float,
    g_ref: ArrayLike,
    g_bar: float = EarthModel.g_bar,
) -> Tuple[NDArray[np.float64], bool]:
    """Body-frame rotation error (reference x estimate) and a degenerate-gravity flag."""
    C_nb = quat_to_dcm(q_est).m.T
    est = dcm_to_euler(quat_to_dcm(q_est), fast_atan=False)

    # Reference nav->body DCM: estimated tilt, reference heading
    M = rot_x(est.roll) @ rot_y(est.pitch) @ rot_z(psi_ref)
    e = np.cross(M[:, 0], C_nb[:, 0])

    g = np.asarray(g_ref, dtype=float)
    g_norm = float(np.linalg.norm(g))
    if g_norm <= MIN_GRAVITY_FRACTION * g_bar:
        return e, True
    return e + np.cross(g / g_norm, C_nb[:, 2]), False


def comp_step(
    state: CompFilterState,
    w_gyro: ArrayLike,
    f_accel: ArrayLike,
    v_ref: ArrayLike,
    psi_ref: float,
    gains: PiGains,
    dT: float,
    g_bar: float = EarthModel.g_bar,
) -> CompFilterState:
    if not dT > 0:
        raise ContractViolation(f"dT must be positive, got {dT}")
    w = np.asarray(w_gyro, dtype=float)
    g_ref = gravity_reference(w, v_ref, f_accel)
    e, degenerate = attitude_error(state.q, psi_ref, g_ref, g_bar)

    integrator = state.integrator + e * dT
    bias = -(gains.kp * e + gains.ki * integrator)
    q = rotate_attitude(state.q, (w - bias) * dT)
    return replace(state, q=q, bias_estimate=bias, integrator=integrator, degenerate=degenerate)


class ComplementaryFilter(LoggerMixin):
    """Drives comp_step over a sample stream."""

    def __init__(
        self,
        q0: Optional[Quaternion] = None,
        gains: Optional[PiGains] = None,
        earth: Optional[EarthModel] = None,
    ):
        self.gains = gains or PiGains()
        self.earth = earth or EarthModel()
        self.state = CompFilterState(q=q0 or Quaternion.identity())

    @property
    def q(self) -> Quaternion:
        return self.state.q

    def step(
        self,
        w_gyro: ArrayLike,
        f_accel: ArrayLike,
        v_ref_body: ArrayLike,
        psi_ref: float,
        dT: float,
    ) -> CompFilterState:
        was_degenerate = self.state.degenerate
        self.state = comp_step(
            self.state, w_gyro, f_accel, v_ref_body, psi_ref, self.gains, dT, self.earth.g_bar
        )
        if self.state.degenerate and not was_degenerate:
            self.logger.warning("Gravity reference degenerate, tilt correction suspended")
        elif was_degenerate and not self.state.degenerate:
            self.logger.info("Gravity reference usable again")
        return self.state
