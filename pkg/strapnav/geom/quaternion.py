"""Quaternion algebra and conversions."""

import math
from typing import Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from strapnav.models.attitude import Dcm, Quaternion, RotationVector
from strapnav.utils.errors import QuaternionNormError

# Below this rotation angle the half-angle terms use their series expansions.
SERIES_THRESHOLD = 1e-4

NORMALIZE_DOMAIN = (0.9, 1.1)

VectorLike = Union[RotationVector, ArrayLike]


def as_vector(v: VectorLike) -> NDArray[np.float64]:
    if isinstance(v, RotationVector):
        return v.as_array()
    return np.asarray(v, dtype=float).reshape(3)


def quat_multiply(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product p ⊗ q; C(p ⊗ q) = C(p) C(q)."""
    return Quaternion(
        p.q0 * q.q0 - p.q1 * q.q1 - p.q2 * q.q2 - p.q3 * q.q3,
        p.q0 * q.q1 + p.q1 * q.q0 + p.q2 * q.q3 - p.q3 * q.q2,
        p.q0 * q.q2 - p.q1 * q.q3 + p.q2 * q.q0 + p.q3 * q.q1,
        p.q0 * q.q3 + p.q1 * q.q2 - p.q2 * q.q1 + p.q3 * q.q0,
    )


def quat_conjugate(q: Quaternion) -> Quaternion:
    return q.conjugate()


def quat_rotate(q: Quaternion, v: ArrayLike) -> NDArray[np.float64]:
    """Rotate v by q, i.e. C(q) v."""
    return quat_to_dcm(q).m @ np.asarray(v, dtype=float)


def quat_normalize(q: Quaternion) -> Quaternion:
    """First-order normalization q * 0.5 * (3 - |q|^2).

    Raises QuaternionNormError when |q|^2 is outside [0.9, 1.1], which only
    happens once the integrator has diverged.
    """
    n2 = q.norm_sq
    lo, hi = NORMALIZE_DOMAIN
    if not lo <= n2 <= hi:
        raise QuaternionNormError(f"quaternion norm^2 {n2:.6f} outside [{lo}, {hi}]")
    k = 0.5 * (3.0 - n2)
    return Quaternion(q.q0 * k, q.q1 * k, q.q2 * k, q.q3 * k)


def rotvec_to_quat(phi: VectorLike) -> Quaternion:
    """Half-angle quaternion of a rotation vector."""
    v = as_vector(phi)
    theta2 = float(v @ v)
    if theta2 < SERIES_THRESHOLD ** 2:
        theta4 = theta2 * theta2
        c = 1.0 - theta2 / 8.0 + theta4 / 384.0
        s = 0.5 - theta2 / 48.0 + theta4 / 3840.0
    else:
        theta = math.sqrt(theta2)
        c = math.cos(0.5 * theta)
        s = math.sin(0.5 * theta) / theta
    return Quaternion(c, s * v[0], s * v[1], s * v[2])


def quat_to_rotvec(q: Quaternion) -> RotationVector:
    if q.q0 < 0:
        q = -q
    v = q.vector
    sin_half = float(np.linalg.norm(v))
    if sin_half < 1e-12:
        return RotationVector.from_array(2.0 * v / q.q0)
    angle = 2.0 * math.atan2(sin_half, q.q0)
    return RotationVector.from_array(v * (angle / sin_half))


def quat_to_dcm(q: Quaternion) -> Dcm:
    """Direction cosine matrix from a unit quaternion."""
    q0, q1, q2, q3 = q.q0, q.q1, q.q2, q.q3
    q00, q11, q22, q33 = q0 * q0, q1 * q1, q2 * q2, q3 * q3
    q01, q02, q03 = q0 * q1, q0 * q2, q0 * q3
    q12, q13, q23 = q1 * q2, q1 * q3, q2 * q3
    return Dcm(np.array([
        [q00 + q11 - q22 - q33, 2.0 * (q12 - q03), 2.0 * (q13 + q02)],
        [2.0 * (q12 + q03), q00 - q11 + q22 - q33, 2.0 * (q23 - q01)],
        [2.0 * (q13 - q02), 2.0 * (q23 + q01), q00 - q11 - q22 + q33],
    ]))


def dcm_to_quat(C: Dcm) -> Quaternion:
    """Shepperd's method, returned with q0 >= 0."""
    m = C.m
    tr = m[0, 0] + m[1, 1] + m[2, 2]
    pivot = int(np.argmax([tr, m[0, 0], m[1, 1], m[2, 2]]))
    if pivot == 0:
        q0 = 0.5 * math.sqrt(max(0.0, 1.0 + tr))
        k = 0.25 / q0
        q = (q0, (m[2, 1] - m[1, 2]) * k, (m[0, 2] - m[2, 0]) * k, (m[1, 0] - m[0, 1]) * k)
    elif pivot == 1:
        q1 = 0.5 * math.sqrt(max(0.0, 1.0 + m[0, 0] - m[1, 1] - m[2, 2]))
        k = 0.25 / q1
        q = ((m[2, 1] - m[1, 2]) * k, q1, (m[0, 1] + m[1, 0]) * k, (m[0, 2] + m[2, 0]) * k)
    elif pivot == 2:
        q2 = 0.5 * math.sqrt(max(0.0, 1.0 - m[0, 0] + m[1, 1] - m[2, 2]))
        k = 0.25 / q2
        q = ((m[0, 2] - m[2, 0]) * k, (m[0, 1] + m[1, 0]) * k, q2, (m[1, 2] + m[2, 1]) * k)
    else:
        q3 = 0.5 * math.sqrt(max(0.0, 1.0 - m[0, 0] - m[1, 1] + m[2, 2]))
        k = 0.25 / q3
        q = ((m[1, 0] - m[0, 1]) * k, (m[0, 2] + m[2, 0]) * k, (m[1, 2] + m[2, 1]) * k, q3)
    quat = Quaternion.from_array(q)
    return -quat if quat.q0 < 0 else quat


def rotation_angle_between(a: Quaternion, b: Quaternion) -> float:
    """Angle (rad) of the rotation taking attitude a to attitude b."""
    d = quat_multiply(a.conjugate(), b)
    return 2.0 * math.atan2(float(np.linalg.norm(d.vector)), abs(d.q0))
