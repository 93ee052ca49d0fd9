"""Unit conversions for sensor datasheet quantities."""

import math
from typing import Dict, Tuple

STANDARD_GRAVITY = 9.80665

_DEG = math.pi / 180.0
_HOUR = 3600.0

# unit name -> (factor to SI, SI unit)
UNITS: Dict[str, Tuple[float, str]] = {
    "rad/s": (1.0, "rad/s"),
    "deg/s": (_DEG, "rad/s"),
    "deg/hr": (_DEG / _HOUR, "rad/s"),
    "rad/sqrt(s)": (1.0, "rad/sqrt(s)"),
    "deg/sqrt(hr)": (_DEG / math.sqrt(_HOUR), "rad/sqrt(s)"),
    "deg/hr^1.5": (_DEG / _HOUR ** 1.5, "rad/s^1.5"),
    "m/s^2": (1.0, "m/s^2"),
    "ug": (1e-6 * STANDARD_GRAVITY, "m/s^2"),
    "mg": (1e-3 * STANDARD_GRAVITY, "m/s^2"),
    "m/s/sqrt(s)": (1.0, "m/s/sqrt(s)"),
    "m/s/sqrt(hr)": (1.0 / math.sqrt(_HOUR), "m/s/sqrt(s)"),
    "ug/sqrt(Hz)": (1e-6 * STANDARD_GRAVITY, "m/s/sqrt(s)"),
    "m/s^2.5": (1.0, "m/s^2.5"),
    "deg": (_DEG, "rad"),
    "rad": (1.0, "rad"),
}


def to_si(value, unit: str):
    """Convert a value (scalar or array) in `unit` to SI."""
    try:
        factor, _ = UNITS[unit]
    except KeyError:
        raise KeyError(f"Unknown unit '{unit}'") from None
    return value * factor


def from_si(value, unit: str):
    """Convert an SI value back to `unit`."""
    factor, _ = UNITS[unit]
    return value / factor


def dph_to_radps(value):
    return to_si(value, "deg/hr")


def arw_to_si(value):
    """deg/sqrt(hr) -> rad/sqrt(s)."""
    return to_si(value, "deg/sqrt(hr)")


def rrw_to_si(value):
    """deg/hr^1.5 -> rad/s^1.5."""
    return to_si(value, "deg/hr^1.5")
