"""13-state closed-loop error-state Kalman filter."""

from .types import (
    N_STATES,
    STATE_LABELS,
    ErrorState13,
    Cov13,
    SparseTransition,
    ScalarMeasurement,
    ProcessNoise,
    zero_error_state,
    symmetrize,
)
from .transition import build_transition
from .covariance import propagate_covariance
from .update import scalar_update, sequential_update
from .correction import apply_corrections
from .filter import (
    KfCycleResult,
    ErrorStateFilter,
    kf_cycle,
    build_gnss_measurements,
    default_process_noise,
    initial_covariance,
)

__all__ = [
    "N_STATES",
    "STATE_LABELS",
    "ErrorState13",
    "Cov13",
    "SparseTransition",
    "ScalarMeasurement",
    "ProcessNoise",
    "zero_error_state",
    "symmetrize",
    "build_transition",
    "propagate_covariance",
    "scalar_update",
    "sequential_update",
    "apply_corrections",
    "KfCycleResult",
    "ErrorStateFilter",
    "kf_cycle",
    "build_gnss_measurements",
    "default_process_noise",
    "initial_covariance",
]
