"""Closed-loop feedback of the error-state estimate."""

from typing import Tuple

import numpy as np

from strapnav.geom import quat_multiply, quat_normalize, quat_to_dcm, rotvec_to_quat, wrap_pi
from strapnav.imu.types import GyroBias, SensorBiases
from strapnav.models.nav_state import NavState
from .types import ACCEL_Z_BIAS, GYRO_BIAS, POSITION, TILT, VELOCITY, ErrorState13, zero_error_state


def apply_corrections(
    nav: NavState,
    x: ErrorState13,
    biases: SensorBiases,
) -> Tuple[NavState, SensorBiases, ErrorState13]:
    """Feed x back into the total state and biases; the returned error state is zero."""
    x = np.asarray(x, dtype=float)

    gyro = GyroBias.from_array(biases.gyro.as_array() + x[GYRO_BIAS])
    biases = SensorBiases(gyro=gyro, accel_z=biases.accel_z + float(x[ACCEL_Z_BIAS]))

    # Tilt -psi mapped into the body frame
    C = quat_to_dcm(nav.q)
    dphi_body = C.m.T @ (-x[TILT])
    q = quat_normalize(quat_multiply(nav.q, rotvec_to_quat(dphi_body)))

    v = nav.v_ned + x[VELOCITY]
    dlat, dlon, dh = x[POSITION]
    nav = nav.with_attitude(q).with_velocity(v).with_position(
        nav.lat + dlat, wrap_pi(nav.lon + dlon), nav.alt + dh
    )
    return nav, biases, zero_error_state()
