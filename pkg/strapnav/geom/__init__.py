"""Attitude representations, frame relations and the fast arctangent."""

from .fast_atan import fast_atan2, platform_atan2, FAST_ATAN_MAX_ERROR, ATAN_COEFFS
from .quaternion import (
    quat_multiply,
    quat_conjugate,
    quat_rotate,
    quat_normalize,
    quat_to_dcm,
    dcm_to_quat,
    rotvec_to_quat,
    quat_to_rotvec,
    rotation_angle_between,
    as_vector,
)
from .euler import (
    rot_x,
    rot_y,
    rot_z,
    euler_to_dcm,
    euler_to_quat,
    dcm_to_euler,
    wrap_pi,
    wrap_two_pi,
)
from .frames import cne, earth_rate_ned, transport_rate, inertial_rate

__all__ = [
    "fast_atan2",
    "platform_atan2",
    "FAST_ATAN_MAX_ERROR",
    "ATAN_COEFFS",
    "quat_multiply",
    "quat_conjugate",
    "quat_rotate",
    "quat_normalize",
    "quat_to_dcm",
    "dcm_to_quat",
    "rotvec_to_quat",
    "quat_to_rotvec",
    "rotation_angle_between",
    "as_vector",
    "rot_x",
    "rot_y",
    "rot_z",
    "euler_to_dcm",
    "euler_to_quat",
    "dcm_to_euler",
    "wrap_pi",
    "wrap_two_pi",
    "cne",
    "earth_rate_ned",
    "transport_rate",
    "inertial_rate",
]
