"""Strapdown mechanization."""

from .mechanization import (
    SMALL_ANGLE_LIMIT,
    check_latitude,
    update_quaternion,
    rotate_attitude,
    attitude_update,
    transform_dv,
    integrate_velocity,
    integrate_position,
    mech_step,
    mech_step_detailed,
    MechStepResult,
)

__all__ = [
    "SMALL_ANGLE_LIMIT",
    "check_latitude",
    "update_quaternion",
    "rotate_attitude",
    "attitude_update",
    "transform_dv",
    "integrate_velocity",
    "integrate_position",
    "mech_step",
    "mech_step_detailed",
    "MechStepResult",
]
