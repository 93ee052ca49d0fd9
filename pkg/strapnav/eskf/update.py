"""Inversion-free sequential scalar measurement updates."""

from typing import Iterable, Tuple

import numpy as np

from strapnav.utils.errors import ContractViolation, CovarianceCollapseError
from .types import Cov13, ErrorState13, ScalarMeasurement, symmetrize


def scalar_update(P: Cov13, x: ErrorState13, m: ScalarMeasurement) -> Tuple[Cov13, ErrorState13]:
    """Kalman update for one scalar measurement; the only division is by s."""
    i = m.index
    s = float(P[i, i]) + m.variance
    if not s > 0:
        raise CovarianceCollapseError(f"innovation variance {s:g} <= 0 for state {i}")

    K = P[:, i] / s
    x_new = x + K * m.innovation(x)
    P_new = P - np.outer(K, P[i, :])
    return symmetrize(P_new), x_new


def sequential_update(
    P: Cov13,
    x: ErrorState13,
    measurements: Iterable[ScalarMeasurement],
) -> Tuple[Cov13, ErrorState13]:
    """Fold scalar_update over the measurements in ascending index order."""
    measurements = list(measurements)
    indices = [m.index for m in measurements]
    if len(set(indices)) != len(indices):
        raise ContractViolation(f"duplicate measurement indices: {indices}")

    for m in sorted(measurements, key=lambda m: m.index):
        P, x = scalar_update(P, x, m)
    return P, x
