"""Euler angles <-> direction cosine matrix."""

import math

import numpy as np
from numpy.typing import NDArray

from strapnav.models.attitude import Dcm, EulerAngles, Quaternion
from .fast_atan import fast_atan2, platform_atan2
from .quaternion import quat_multiply

# |c31| at or above this is treated as gimbal lock.
GIMBAL_LOCK_TOLERANCE = 1e-12

_PI = math.pi
_TWO_PI = 2.0 * math.pi


def rot_x(phi: float) -> NDArray[np.float64]:
    """Single-axis nav->body rotation about x."""
    c, s = math.cos(phi), math.sin(phi)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, s], [0.0, -s, c]])


def rot_y(theta: float) -> NDArray[np.float64]:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, 0.0, -s], [0.0, 1.0, 0.0], [s, 0.0, c]])


def rot_z(psi: float) -> NDArray[np.float64]:
    c, s = math.cos(psi), math.sin(psi)
    return np.array([[c, s, 0.0], [-s, c, 0.0], [0.0, 0.0, 1.0]])


def euler_to_dcm(e: EulerAngles) -> Dcm:
    """C_b^n, the transpose of C_x(roll) C_y(pitch) C_z(heading)."""
    c_nb = rot_x(e.roll) @ rot_y(e.pitch) @ rot_z(e.heading)
    return Dcm(c_nb.T)


def euler_to_quat(e: EulerAngles) -> Quaternion:
    half_r, half_p, half_h = 0.5 * e.roll, 0.5 * e.pitch, 0.5 * e.heading
    qz = Quaternion(math.cos(half_h), 0.0, 0.0, math.sin(half_h))
    qy = Quaternion(math.cos(half_p), 0.0, math.sin(half_p), 0.0)
    qx = Quaternion(math.cos(half_r), math.sin(half_r), 0.0, 0.0)
    return quat_multiply(quat_multiply(qz, qy), qx)


def _full_angle(y: float, x: float, atan) -> float:
    """Quadrant-corrected angle in (-pi, pi] built on a reduced arctangent."""
    if x == 0.0:
        return 0.0 if y == 0.0 else math.copysign(_PI / 2, y)
    angle = atan(y, x)
    if x < 0.0:
        angle += _PI if y >= 0.0 else -_PI
    return angle


def wrap_pi(angle: float) -> float:
    """Wrap to (-pi, pi]."""
    while angle > _PI:
        angle -= _TWO_PI
    while angle <= -_PI:
        angle += _TWO_PI
    return angle


def wrap_two_pi(angle: float) -> float:
    """Wrap to [0, 2pi)."""
    while angle < 0.0:
        angle += _TWO_PI
    while angle >= _TWO_PI:
        angle -= _TWO_PI
    return angle + 0.0  # -0.0 -> 0.0


def dcm_to_euler(C: Dcm, fast_atan: bool = True) -> EulerAngles:
    """Roll, pitch and heading from C_b^n.

    With fast_atan the polynomial kernel is used; otherwise the library
    arctangent. Pitch is clamped to ±pi/2 when |c31| reaches 1; in that case
    roll is reported as 0 and heading absorbs the combined rotation.
    """
    atan = fast_atan2 if fast_atan else platform_atan2
    m = C.m
    c31 = float(m[2, 0])

    if abs(c31) >= 1.0 - GIMBAL_LOCK_TOLERANCE:
        pitch = -math.copysign(_PI / 2, c31)
        heading = _full_angle(-float(m[0, 1]), float(m[1, 1]), atan)
        return EulerAngles(0.0, pitch, wrap_two_pi(heading))

    roll = wrap_pi(_full_angle(float(m[2, 1]), float(m[2, 2]), atan))
    pitch = -atan(c31, math.sqrt(1.0 - c31 * c31))
    heading = wrap_two_pi(_full_angle(float(m[1, 0]), float(m[0, 0]), atan))
    return EulerAngles(roll, pitch, heading)
