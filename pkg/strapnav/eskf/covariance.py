"""Covariance propagation touching only the nonzero transition entries."""

import numpy as np

from .types import Cov13, ProcessNoise, SparseTransition, symmetrize


def propagate_covariance(P: Cov13, T: SparseTransition, q: ProcessNoise, dT: float) -> Cov13:
    """P <- (I + T) P (I + T)^T + diag(q) dT.

    Two passes over the sparse entries: rows of P first, then columns of the
    intermediate product.
    """
    ko = np.array(P, dtype=float)
    for i, j, v in T:
        ko[i, :] += v * P[j, :]

    kp = ko.copy()
    for i, j, v in T:
        kp[:, i] += v * ko[:, j]

    kp[np.diag_indices_from(kp)] += q.as_array() * dT
    return symmetrize(kp)
