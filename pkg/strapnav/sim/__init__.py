"""Truth trajectories, sensor-error models and GNSS synthesis."""

from .specs import TrajectorySpec, SensorErrorSpec, GnssSpec, TRAJECTORY_KINDS
from .trajectory import Truth, gen_truth, TRUTH_COLUMNS
from .sensors import ImuLog, corrupt_imu, gauss_markov, random_walk, IMU_COLUMNS
from .gnss import GnssLog, gen_gnss, fix_indices, GNSS_COLUMNS
from .montecarlo import run_monte_carlo

__all__ = [
    "TrajectorySpec",
    "SensorErrorSpec",
    "GnssSpec",
    "TRAJECTORY_KINDS",
    "Truth",
    "gen_truth",
    "TRUTH_COLUMNS",
    "ImuLog",
    "corrupt_imu",
    "gauss_markov",
    "random_walk",
    "IMU_COLUMNS",
    "GnssLog",
    "gen_gnss",
    "fix_indices",
    "GNSS_COLUMNS",
    "run_monte_carlo",
]
