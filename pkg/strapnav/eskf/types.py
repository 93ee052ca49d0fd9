"""Error-state vector layout and filter value types."""

from dataclasses import dataclass
from typing import Iterator, Tuple

import numpy as np
from numpy.typing import NDArray

from strapnav.utils.errors import ContractViolation

N_STATES = 13

# Error-state layout
GYRO_BIAS = slice(0, 3)
ACCEL_Z_BIAS = 3
TILT = slice(4, 7)
VELOCITY = slice(7, 10)
POSITION = slice(10, 13)

STATE_LABELS = (
    "bgx", "bgy", "bgz", "baz",
    "psi_n", "psi_e", "psi_d",
    "dv_n", "dv_e", "dv_d",
    "dlat", "dlon", "dh",
)

MEASURABLE = range(7, 13)

ErrorState13 = NDArray[np.float64]
Cov13 = NDArray[np.float64]


def zero_error_state() -> ErrorState13:
    return np.zeros(N_STATES)


def symmetrize(P: Cov13) -> Cov13:
    return 0.5 * (P + P.T)


@dataclass(frozen=True)
class SparseTransition:
    """Nonzero entries (row, col, value) of A*dT, the transition minus identity."""
    entries: Tuple[Tuple[int, int, float], ...] = ()

    def __iter__(self) -> Iterator[Tuple[int, int, float]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def value(self, row: int, col: int) -> float:
        return sum(v for r, c, v in self.entries if r == row and c == col)

    def to_dense(self) -> NDArray[np.float64]:
        A = np.zeros((N_STATES, N_STATES))
        for r, c, v in self.entries:
            A[r, c] += v
        return A


@dataclass(frozen=True)
class ScalarMeasurement:
    """Observation z of error-state component `index` with variance R."""
    index: int
    z: float
    variance: float

    def __post_init__(self):
        if self.index not in MEASURABLE:
            raise ContractViolation(f"measurement index {self.index} not in 7..12")
        if self.variance < 0:
            raise ContractViolation(f"measurement variance must be >= 0, got {self.variance}")

    def innovation(self, x: ErrorState13) -> float:
        return self.z - float(x[self.index])


@dataclass(frozen=True)
class ProcessNoise:
    """Diagonal process-noise densities, one per error state."""
    q: Tuple[float, ...] = (0.0,) * N_STATES

    def __post_init__(self):
        if len(self.q) != N_STATES:
            raise ContractViolation(f"process noise needs {N_STATES} entries, got {len(self.q)}")
        if any(v < 0 for v in self.q):
            raise ContractViolation("process noise densities must be nonnegative")

    def as_array(self) -> NDArray[np.float64]:
        return np.array(self.q, dtype=float)
