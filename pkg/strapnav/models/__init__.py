"""strapnav models - value types shared across modules."""

from .attitude import Quaternion, Dcm, EulerAngles, RotationVector
from .nav_state import NavState, EarthModel
from .run_result import RunResult, RunStatus
from .dataset import DatasetBundle
from .gnss import GnssFix

__all__ = [
    "Quaternion",
    "Dcm",
    "EulerAngles",
    "RotationVector",
    "NavState",
    "EarthModel",
    "RunResult",
    "RunStatus",
    "DatasetBundle",
    "GnssFix",
]
