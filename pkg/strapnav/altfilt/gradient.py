"""Gradient-descent quaternion filter with accelerometer and magnetometer references."""

import math
from dataclasses import replace
from typing import Optional, Sequence, Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from strapnav.geom import quat_multiply, quat_normalize, quat_to_dcm
from strapnav.models.attitude import Quaternion
from strapnav.utils.errors import ContractViolation, DomainError
from strapnav.utils.logger import LoggerMixin
from .types import GdFilterState

GRAVITY_REFERENCE = np.array([0.0, 0.0, 1.0])

# |s_accel x s_mag| below this leaves heading unobservable.
PARALLEL_TOLERANCE = 1e-6

DEFAULT_INCLINATION_DEG = 60.0


def mag_reference(inclination: float) -> NDArray[np.float64]:
    """Unit Earth-field direction in NED for a dip angle (rad, positive down)."""
    return np.array([math.cos(inclination), 0.0, math.sin(inclination)])


def unit(v: ArrayLike) -> NDArray[np.float64]:
    v = np.asarray(v, dtype=float)
    n = float(np.linalg.norm(v))
    if n == 0.0:
        raise DomainError("zero-norm measurement vector")
    return v / n


def gd_objective(q: Quaternion, d_ref: ArrayLike, s: ArrayLike) -> NDArray[np.float64]:
    """Vector part of q* ⊗ d ⊗ q minus s, i.e. C(q)^T d - s."""
    s = np.asarray(s, dtype=float)
    if float(np.linalg.norm(s)) == 0.0:
        raise DomainError("zero-norm measurement vector")
    return quat_to_dcm(q).m.T @ np.asarray(d_ref, dtype=float) - s


def _dcm_partials(q: Quaternion) -> Tuple[NDArray[np.float64], ...]:
    q0, q1, q2, q3 = q.q0, q.q1, q.q2, q.q3
    return (
        2.0 * np.array([[q0, -q3, q2], [q3, q0, -q1], [-q2, q1, q0]]),
        2.0 * np.array([[q1, q2, q3], [q2, -q1, -q0], [q3, q0, -q1]]),
        2.0 * np.array([[-q2, q1, q0], [q1, q2, q3], [-q0, q3, -q2]]),
        2.0 * np.array([[-q3, -q0, q1], [q0, -q3, q2], [q1, q2, q3]]),
    )


def gd_jacobian(q: Quaternion, d_ref: ArrayLike) -> NDArray[np.float64]:
    """3x4 Jacobian of gd_objective with respect to (q0, q1, q2, q3)."""
    d = np.asarray(d_ref, dtype=float)
    return np.column_stack([dC.T @ d for dC in _dcm_partials(q)])


def gd_gradient(
    q: Quaternion,
    d_refs: Sequence[ArrayLike],
    measurements: Sequence[ArrayLike],
) -> NDArray[np.float64]:
    """Gradient of 0.5 * sum |f_i|^2 over the stacked objectives."""
    grad = np.zeros(4)
    for d, s in zip(d_refs, measurements):
        grad += gd_jacobian(q, d).T @ gd_objective(q, d, s)
    return grad


def gd_cost(q: Quaternion, d_refs: Sequence[ArrayLike], measurements: Sequence[ArrayLike]) -> float:
    return 0.5 * sum(float(f @ f) for f in (gd_objective(q, d, s) for d, s in zip(d_refs, measurements)))


def gd_step(
    state: GdFilterState,
    w_gyro: ArrayLike,
    f_accel: ArrayLike,
    m_mag: Optional[ArrayLike],
    dT: float,
    mag_ref: Optional[ArrayLike] = None,
) -> GdFilterState:
    """Gyro-propagated quaternion pulled down the normalized objective gradient."""
    if not dT > 0:
        raise ContractViolation(f"dT must be positive, got {dT}")
    q = state.q
    w = np.asarray(w_gyro, dtype=float)

    s_accel = unit(-np.asarray(f_accel, dtype=float))
    d_refs = [GRAVITY_REFERENCE]
    measurements = [s_accel]
    observable = False
    if m_mag is not None:
        s_mag = unit(m_mag)
        if float(np.linalg.norm(np.cross(s_accel, s_mag))) > PARALLEL_TOLERANCE:
            if mag_ref is None:
                mag_ref = mag_reference(math.radians(DEFAULT_INCLINATION_DEG))
            d_refs.append(np.asarray(mag_ref, dtype=float))
            measurements.append(s_mag)
            observable = True

    q_dot = 0.5 * quat_multiply(q, Quaternion(0.0, w[0], w[1], w[2])).as_array()
    grad = gd_gradient(q, d_refs, measurements)
    grad_norm = float(np.linalg.norm(grad))
    if state.beta > 0 and grad_norm > 0.0:
        q_dot = q_dot - state.beta * grad / grad_norm

    q_new = quat_normalize(Quaternion.from_array(q.as_array() + q_dot * dT))
    return replace(state, q=q_new, heading_observable=observable)


class GradientDescentFilter(LoggerMixin):
    """Drives gd_step with a fixed magnetic reference direction."""

    def __init__(
        self,
        q0: Optional[Quaternion] = None,
        beta: float = 0.1,
        mag_inclination_deg: float = DEFAULT_INCLINATION_DEG,
    ):
        self.mag_ref = mag_reference(math.radians(mag_inclination_deg))
        self.state = GdFilterState(q=q0 or Quaternion.identity(), beta=beta)

    @property
    def q(self) -> Quaternion:
        return self.state.q

    def step(
        self,
        w_gyro: ArrayLike,
        f_accel: ArrayLike,
        m_mag: Optional[ArrayLike],
        dT: float,
    ) -> GdFilterState:
        was_observable = self.state.heading_observable
        self.state = gd_step(self.state, w_gyro, f_accel, m_mag, dT, self.mag_ref)
        if was_observable and not self.state.heading_observable:
            self.logger.warning("Accelerometer and magnetometer parallel, heading unobservable")
        return self.state
