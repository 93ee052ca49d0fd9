"""Gyro debiasing and coning/sculling accumulation."""

from typing import Tuple

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .types import ConingState, GyroBias, RawImuSample, ScullingState, SensorBiases

_SIXTH = 1.0 / 6.0


def debias_gyro(sample: RawImuSample, bias: GyroBias) -> NDArray[np.float64]:
    """Angle increment (w - b) * dT."""
    return np.array([
        (sample.wx - bias.bx) * sample.dT,
        (sample.wy - bias.by) * sample.dT,
        (sample.wz - bias.bz) * sample.dT,
    ])


def debias_accel(sample: RawImuSample, biases: SensorBiases) -> NDArray[np.float64]:
    """Velocity increment with the accelerometer z compensation applied."""
    return np.array([
        sample.fx * sample.dT,
        sample.fy * sample.dT,
        (sample.fz + biases.accel_z) * sample.dT,
    ])


def coning_step(state: ConingState, dalpha_l: ArrayLike) -> ConingState:
    """Advance alpha and beta by one l-cycle.

    dbeta = 1/2 (alpha_{l-1} + dalpha_{l-1}/6) x dalpha_l, with alpha_{l-1}
    taken before this cycle's increment is added.
    """
    dalpha = np.asarray(dalpha_l, dtype=float)
    dbeta = 0.5 * np.cross(state.alpha + _SIXTH * state.prev_dalpha, dalpha)
    return ConingState(
        alpha=state.alpha + dalpha,
        beta=state.beta + dbeta,
        prev_dalpha=dalpha,
    )


def coning_finalize(state: ConingState) -> Tuple[NDArray[np.float64], ConingState]:
    """Return phi_m = alpha_m + beta_m and a fresh state."""
    return state.alpha + state.beta, ConingState()


def sculling_step(
    state: ScullingState,
    dalpha_l: ArrayLike,
    dv_l: ArrayLike,
    coning: ConingState,
) -> ScullingState:
    """Accumulate v_l and the sculling term for one l-cycle.

    `coning` must be the coning state before it absorbs dalpha_l.
    """
    dalpha = np.asarray(dalpha_l, dtype=float)
    dv = np.asarray(dv_l, dtype=float)
    dscul = 0.5 * (
        np.cross(coning.alpha + _SIXTH * state.prev_dalpha, dv)
        + np.cross(state.v + _SIXTH * state.prev_dv, dalpha)
    )
    return ScullingState(
        v=state.v + dv,
        dv_scul=state.dv_scul + dscul,
        prev_dalpha=dalpha,
        prev_dv=dv,
    )


def sculling_finalize(
    state: ScullingState,
    alpha_m: ArrayLike,
    rotation_compensation: bool = True,
) -> Tuple[NDArray[np.float64], ScullingState]:
    """Return dv_m = v_m + 1/2 (alpha_m x v_m) + dv_scul_m and a fresh state."""
    dv_m = state.v + state.dv_scul
    if rotation_compensation:
        dv_m = dv_m + 0.5 * np.cross(np.asarray(alpha_m, dtype=float), state.v)
    return dv_m, ScullingState()
