"""Shared fixtures."""

import logging
from pathlib import Path
from typing import Dict, Optional

import numpy as np
import pytest

from strapnav.models.nav_state import EarthModel
from strapnav.navigator import io
from strapnav.sim import GnssSpec, SensorErrorSpec, TrajectorySpec, corrupt_imu, gen_gnss, gen_truth


@pytest.fixture(autouse=True)
def reset_logging():
    """Undo setup_logging from CLI invocations so caplog keeps working."""
    yield
    root = logging.getLogger("strapnav")
    root.handlers = []
    root.propagate = True
    root.setLevel(logging.NOTSET)


@pytest.fixture
def earth():
    return EarthModel()


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def _write_spec(path: Path, entries: Dict[str, object]) -> Path:
    lines = []
    for key, value in entries.items():
        if isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        lines.append(f"{key} = {value}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


@pytest.fixture
def spec_file(tmp_path):
    """Write a key=value file under tmp_path and return its path."""

    def _write(name: str, entries: Dict[str, object]) -> Path:
        return _write_spec(tmp_path / name, entries)

    return _write


@pytest.fixture
def make_dataset(tmp_path):
    """Simulate a dataset directly (no CLI) and write it under tmp_path."""

    def _make(
        name: str = "data",
        traj: Optional[Dict[str, object]] = None,
        err: Optional[Dict[str, object]] = None,
        gnss: Optional[Dict[str, object]] = None,
    ):
        spec = TrajectorySpec.from_dict({"duration": 10, "l_rate": 100, **(traj or {})})
        errors = SensorErrorSpec.from_dict(err or {})
        gnss_spec = GnssSpec.from_dict({"pos_sigma": 0, "vel_sigma": 0, **(gnss or {})})
        truth = gen_truth(spec)
        imu = corrupt_imu(truth, errors)
        fixes = gen_gnss(truth, gnss_spec)
        meta = {"l_rate": spec.l_rate, "seed": errors.seed, "kind": spec.kind}
        return io.write_dataset(tmp_path / name, truth, imu, fixes, meta)

    return _make
