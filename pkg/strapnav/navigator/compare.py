"""Side-by-side metric comparison of run directories."""

from pathlib import Path
from typing import List, Sequence, Union

import numpy as np
import pandas as pd

from strapnav.utils.errors import DatasetError
from . import io
from .metrics import METRIC_NAMES
from .steppers import ESTIMATE_COLUMNS


def load_run(run_dir: Union[str, Path]) -> pd.DataFrame:
    run_dir = Path(run_dir)
    if not run_dir.is_dir():
        raise DatasetError(f"Run directory not found: {run_dir}")
    metrics_path = run_dir / io.METRICS_FILE
    if not metrics_path.exists():
        raise DatasetError(f"Missing file: {metrics_path}")
    return pd.read_csv(metrics_path)


def check_time_bases(run_dirs: Sequence[Path]) -> None:
    """All runs must share the same estimate epochs."""
    reference = None
    for run_dir in run_dirs:
        estimate = io.read_frame(Path(run_dir) / io.ESTIMATE_FILE, ESTIMATE_COLUMNS, allow_nan=True)
        t = estimate["t"].to_numpy(float)
        if reference is None:
            reference = (run_dir, t)
        elif len(t) != len(reference[1]) or not np.allclose(t, reference[1], rtol=0.0, atol=1e-9):
            raise DatasetError(f"Time base of {run_dir} does not match {reference[0]}")


def compare_runs(run_dirs: Sequence[Union[str, Path]]) -> pd.DataFrame:
    """One row per run; `<metric>_delta` columns are differences from the first run."""
    run_dirs: List[Path] = [Path(d) for d in run_dirs]
    if len(run_dirs) < 2:
        raise DatasetError("compare needs at least two run directories")
    frames = [load_run(d) for d in run_dirs]
    check_time_bases(run_dirs)

    table = pd.concat(frames, ignore_index=True)
    table.insert(0, "run", [str(d) for d in run_dirs])
    for name in METRIC_NAMES:
        table[f"{name}_delta"] = table[name] - table[name].iloc[0]
    return table
