"""Sparse transition-matrix construction."""

import math

from strapnav.mech import check_latitude
from strapnav.models.attitude import Dcm
from strapnav.models.nav_state import EarthModel
from .types import SparseTransition


def build_transition(
    C: Dcm,
    a_n: float,
    a_e: float,
    earth: EarthModel,
    lat: float,
    dT: float,
) -> SparseTransition:
    """The 19 nonzero entries of A*dT.

    a_n, a_e are the north/east specific-force components in the navigation frame.
    """
    check_latitude(lat)
    g = earth.g_bar
    m = C.m
    entries = []

    # Tilt driven by gyro biases through the DCM rows
    for i in range(3):
        for j in range(3):
            entries.append((4 + i, j, float(m[i, j]) * dT))

    entries += [
        (7, 5, g * dT),
        (7, 6, a_e * dT),
        (8, 4, -g * dT),
        (8, 6, -a_n * dT),
        (9, 3, float(m[2, 2]) * dT),
        (9, 4, -a_e * dT),
        (9, 5, -a_n * dT),
        (10, 7, dT / earth.R),
        (11, 8, dT / (earth.R * math.cos(lat))),
        (12, 9, -dT),
    ]
    return SparseTransition(tuple(entries))
