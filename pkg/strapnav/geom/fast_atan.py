"""Polynomial arctangent kernel."""

import math

import numpy as np

from strapnav.utils.errors import DomainError

ATAN_COEFFS = (0.999896, -0.330756, 0.181946, -0.0876858, 0.021997)

# Max |fast_atan2 - arctan2| over theta = linspace(-pi/2, pi/2, 1_000_001)[1:],
# c1 = sin(theta), c2 = cos(theta). Regression-locked.
FAST_ATAN_MAX_ERROR = 2.8291605836061606e-05

_HALF_PI = math.pi / 2


def _poly(r):
    r2 = r * r
    return r * (0.999896 + r2 * (-0.330756 + r2 * (0.181946 + r2 * (-0.0876858 + r2 * 0.021997))))


def _fast_atan2_scalar(c1: float, c2: float) -> float:
    if c1 == 0.0 and c2 == 0.0:
        raise DomainError("fast_atan2 is undefined at (0, 0)")
    if abs(c1) >= abs(c2):
        # atan(x) = ±pi/2 - atan(1/x); c2 == 0 lands on +pi/2 for either sign of c1
        half = _HALF_PI if c1 * c2 >= 0.0 else -_HALF_PI
        return half - _poly(c2 / c1)
    return _poly(c1 / c2)


def fast_atan2(c1, c2):
    """Arctangent of c1/c2 reduced to (-pi/2, pi/2].

    Scalars return a float; arrays are evaluated elementwise.
    """
    if np.ndim(c1) == 0 and np.ndim(c2) == 0:
        return _fast_atan2_scalar(float(c1), float(c2))

    a1, a2 = np.broadcast_arrays(np.asarray(c1, dtype=float), np.asarray(c2, dtype=float))
    if np.any((a1 == 0.0) & (a2 == 0.0)):
        raise DomainError("fast_atan2 is undefined at (0, 0)")

    swap = np.abs(a1) >= np.abs(a2)
    with np.errstate(all="ignore"):
        ratio = np.where(swap, a2 / a1, a1 / a2)
        poly = _poly(ratio)
    half = np.where(a1 * a2 >= 0.0, _HALF_PI, -_HALF_PI)
    return np.where(swap, half - poly, poly)


def platform_atan2(c1: float, c2: float) -> float:
    """Library arctangent with the same reduced range as fast_atan2."""
    if c1 == 0.0 and c2 == 0.0:
        raise DomainError("atan2 is undefined at (0, 0)")
    if c2 == 0.0:
        return _HALF_PI
    return math.atan(c1 / c2)
