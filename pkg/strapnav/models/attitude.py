"""Attitude representations."""

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray


@dataclass(frozen=True)
class Quaternion:
    """Scalar-first unit quaternion, body->nav."""
    q0: float = 1.0
    q1: float = 0.0
    q2: float = 0.0
    q3: float = 0.0

    @classmethod
    def identity(cls) -> "Quaternion":
        return cls(1.0, 0.0, 0.0, 0.0)

    @classmethod
    def from_array(cls, q: ArrayLike) -> "Quaternion":
        q0, q1, q2, q3 = (float(v) for v in q)
        return cls(q0, q1, q2, q3)

    def as_array(self) -> NDArray[np.float64]:
        return np.array([self.q0, self.q1, self.q2, self.q3])

    @property
    def norm_sq(self) -> float:
        return self.q0 * self.q0 + self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3

    @property
    def vector(self) -> NDArray[np.float64]:
        return np.array([self.q1, self.q2, self.q3])

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __repr__(self) -> str:
        return f"Quaternion({self.q0:.9f}, {self.q1:.9f}, {self.q2:.9f}, {self.q3:.9f})"


@dataclass(frozen=True, eq=False)
class Dcm:
    """Direction cosine matrix C_b^n (body->nav), row-major."""
    m: NDArray[np.float64] = field(default_factory=lambda: np.eye(3))

    def __post_init__(self):
        m = np.array(self.m, dtype=float).reshape(3, 3)
        m.setflags(write=False)
        object.__setattr__(self, "m", m)

    @classmethod
    def identity(cls) -> "Dcm":
        return cls(np.eye(3))

    def as_array(self) -> NDArray[np.float64]:
        return np.array(self.m)

    def orthonormality_error(self) -> float:
        return float(np.max(np.abs(self.m @ self.m.T - np.eye(3))))


@dataclass(frozen=True)
class EulerAngles:
    """Aerospace zyx Euler angles in radians."""
    roll: float = 0.0
    pitch: float = 0.0
    heading: float = 0.0

    def as_array(self) -> NDArray[np.float64]:
        return np.array([self.roll, self.pitch, self.heading])

    def degrees(self) -> NDArray[np.float64]:
        return np.degrees(self.as_array())

    def __str__(self) -> str:
        r, p, h = self.degrees()
        return f"roll={r:.4f}° pitch={p:.4f}° heading={h:.4f}°"


@dataclass(frozen=True)
class RotationVector:
    """Rotation vector; magnitude is the angle (rad), direction the axis."""
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, v: ArrayLike) -> "RotationVector":
        x, y, z = (float(c) for c in v)
        return cls(x, y, z)

    def as_array(self) -> NDArray[np.float64]:
        return np.array([self.x, self.y, self.z])

    @property
    def angle(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
