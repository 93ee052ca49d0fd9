"""Navigation-frame relations on a spherical Earth."""

import math

import numpy as np
from numpy.typing import NDArray

from strapnav.models.attitude import Dcm
from strapnav.models.nav_state import EarthModel


def cne(lat: float, lon: float) -> Dcm:
    """C_n^e: NED navigation frame to ECEF, i.e. C_z(-lon) C_y(pi/2 + lat).

    Entry (1, 2) is -sin(lon); with +sin(lon) the rows are not orthogonal.
    """
    sl, cl = math.sin(lat), math.cos(lat)
    so, co = math.sin(lon), math.cos(lon)
    return Dcm(np.array([
        [-sl * co, -so, -cl * co],
        [-sl * so, co, -cl * so],
        [cl, 0.0, -sl],
    ]))


def earth_rate_ned(lat: float, earth: EarthModel) -> NDArray[np.float64]:
    """omega_ie^n."""
    return np.array([earth.omega_e * math.cos(lat), 0.0, -earth.omega_e * math.sin(lat)])


def transport_rate(lat: float, v_n: float, v_e: float, earth: EarthModel) -> NDArray[np.float64]:
    """omega_en^n = (lon_dot cos(lat), -lat_dot, -lon_dot sin(lat))."""
    lat_dot = v_n / earth.R
    lon_dot = v_e / (earth.R * math.cos(lat))
    return np.array([lon_dot * math.cos(lat), -lat_dot, -lon_dot * math.sin(lat)])


def inertial_rate(lat: float, v_n: float, v_e: float, earth: EarthModel) -> NDArray[np.float64]:
    """omega_in^n = omega_ie^n + omega_en^n."""
    return earth_rate_ned(lat, earth) + transport_rate(lat, v_n, v_e, earth)
