"""Attitude-only alternatives to the error-state filter."""

from .types import PiGains, CompFilterState, GdFilterState
from .complementary import (
    gravity_reference,
    attitude_error,
    comp_step,
    ComplementaryFilter,
)
from .gradient import (
    mag_reference,
    gd_objective,
    gd_jacobian,
    gd_gradient,
    gd_cost,
    gd_step,
    GradientDescentFilter,
)

__all__ = [
    "PiGains",
    "CompFilterState",
    "GdFilterState",
    "gravity_reference",
    "attitude_error",
    "comp_step",
    "ComplementaryFilter",
    "mag_reference",
    "gd_objective",
    "gd_jacobian",
    "gd_gradient",
    "gd_cost",
    "gd_step",
    "GradientDescentFilter",
]
