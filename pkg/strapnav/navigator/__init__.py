"""Dataset-driven filter runs, metrics and comparisons."""

from .navigator import Navigator, align_fixes, epoch_times, initial_state
from .metrics import compute_metrics, attitude_errors, convergence_time, METRIC_NAMES
from .compare import compare_runs
from .steppers import ESTIMATE_COLUMNS

__all__ = [
    "Navigator",
    "align_fixes",
    "epoch_times",
    "initial_state",
    "compute_metrics",
    "attitude_errors",
    "convergence_time",
    "METRIC_NAMES",
    "compare_runs",
    "ESTIMATE_COLUMNS",
]
