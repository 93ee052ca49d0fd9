"""Attitude-only filter states and gains."""

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from strapnav.models.attitude import Quaternion
from strapnav.utils.errors import ContractViolation


def _zeros() -> NDArray[np.float64]:
    return np.zeros(3)


@dataclass(frozen=True)
class PiGains:
    """Proportional (1/s) and integral (1/s^2) compensator gains."""
    kp: float = 1.0
    ki: float = 0.1

    def __post_init__(self):
        if not self.kp > 0:
            raise ContractViolation(f"kp must be positive, got {self.kp}")
        if self.ki < 0:
            raise ContractViolation(f"ki must be nonnegative, got {self.ki}")


@dataclass(frozen=True, eq=False)
class CompFilterState:
    q: Quaternion = field(default_factory=Quaternion.identity)
    bias_estimate: NDArray[np.float64] = field(default_factory=_zeros)
    integrator: NDArray[np.float64] = field(default_factory=_zeros)
    degenerate: bool = False


@dataclass(frozen=True)
class GdFilterState:
    q: Quaternion = field(default_factory=Quaternion.identity)
    beta: float = 0.1
    heading_observable: bool = True

    def __post_init__(self):
        if self.beta < 0:
            raise ContractViolation(f"beta must be nonnegative, got {self.beta}")
