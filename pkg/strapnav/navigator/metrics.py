"""Estimate-versus-truth error metrics."""

import math
from typing import Dict

import numpy as np
import pandas as pd
from numpy.typing import NDArray
from scipy.spatial.transform import Rotation

from strapnav.models.nav_state import EarthModel
from strapnav.utils.errors import DatasetError

METRIC_NAMES = (
    "rms_attitude_deg",
    "final_attitude_deg",
    "rms_velocity",
    "rms_horizontal",
    "rms_vertical",
    "convergence_time",
)


def _rotations(df: pd.DataFrame) -> Rotation:
    return Rotation.from_euler("ZYX", df[["heading", "pitch", "roll"]].to_numpy(float))


def attitude_errors(estimate: pd.DataFrame, truth: pd.DataFrame) -> NDArray[np.float64]:
    """Rotation angle (rad) between estimated and true attitude, row by row."""
    return (_rotations(truth).inv() * _rotations(estimate)).magnitude()


def align_truth(estimate: pd.DataFrame, truth: pd.DataFrame, tolerance: float = 1e-6) -> pd.DataFrame:
    """Truth rows at the estimate epochs."""
    merged = pd.merge_asof(
        estimate[["t"]],
        truth,
        on="t",
        direction="nearest",
        tolerance=tolerance,
    )
    if merged.isna().any().any():
        raise DatasetError("estimate epochs do not line up with truth epochs")
    return merged


def convergence_time(t: NDArray[np.float64], err: NDArray[np.float64], threshold: float) -> float:
    """First epoch after which err stays below threshold; NaN if it never settles."""
    above = np.flatnonzero(err >= threshold)
    if len(above) == 0:
        return float(t[0])
    if above[-1] == len(err) - 1:
        return math.nan
    return float(t[above[-1] + 1])


def _rms(x: NDArray[np.float64]) -> float:
    return float(np.sqrt(np.mean(x ** 2))) if len(x) else math.nan


def compute_metrics(
    estimate: pd.DataFrame,
    truth: pd.DataFrame,
    threshold_deg: float = 0.5,
    earth: EarthModel = None,
) -> Dict[str, float]:
    """RMS attitude, velocity and position errors plus attitude convergence time."""
    earth = earth or EarthModel()
    if estimate.empty:
        return {name: math.nan for name in METRIC_NAMES}
    ref = align_truth(estimate, truth)
    t = estimate["t"].to_numpy(float)

    att = np.degrees(attitude_errors(estimate, ref))
    dv = estimate[["vn", "ve", "vd"]].to_numpy(float) - ref[["vn", "ve", "vd"]].to_numpy(float)
    lat = ref["lat"].to_numpy(float)
    dn = (estimate["lat"].to_numpy(float) - lat) * earth.R
    dlon = np.angle(np.exp(1j * (estimate["lon"].to_numpy(float) - ref["lon"].to_numpy(float))))
    de = dlon * earth.R * np.cos(lat)
    dh = estimate["h"].to_numpy(float) - ref["h"].to_numpy(float)

    return {
        "rms_attitude_deg": _rms(att),
        "final_attitude_deg": float(att[-1]),
        "rms_velocity": _rms(np.linalg.norm(dv, axis=1)),
        "rms_horizontal": _rms(np.hypot(dn, de)),
        "rms_vertical": _rms(dh),
        "convergence_time": convergence_time(t, att, threshold_deg),
    }
