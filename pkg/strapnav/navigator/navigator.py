"""Navigator: runs a dataset through the selected filter and writes the run outputs."""

import math
import time
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd
from numpy.typing import NDArray

from strapnav.config.run_config import RunConfig
from strapnav.eskf import STATE_LABELS
from strapnav.geom import euler_to_quat
from strapnav.imu import IncrementCompensator
from strapnav.models.attitude import EulerAngles
from strapnav.models.dataset import DatasetBundle
from strapnav.models.gnss import GnssFix
from strapnav.models.nav_state import EarthModel, NavState
from strapnav.models.run_result import RunResult
from strapnav.sim import GnssLog, ImuLog
from strapnav.utils.errors import DatasetError, DivergenceError
from strapnav.utils.logger import LoggerMixin, get_logger
from . import io
from .metrics import compute_metrics
from .steppers import (
    ESTIMATE_COLUMNS,
    CompStepper,
    EskfStepper,
    GdStepper,
    InsStepper,
    Stepper,
    TruthLookup,
)

logger = get_logger("navigator")

INNOVATION_COLUMNS = ["t"] + list(STATE_LABELS[7:])


def epoch_times(imu: ImuLog, l_per_m: int) -> NDArray[np.float64]:
    """End time of every m-interval, including a trailing partial one."""
    times = imu.t[l_per_m - 1::l_per_m]
    if len(imu.t) % l_per_m:
        times = np.append(times, imu.t[-1])
    return times


def align_fixes(
    gnss: GnssLog,
    epochs: NDArray[np.float64],
    lag: float,
    tolerance: float,
) -> Dict[int, GnssFix]:
    """Map each fix, shifted back by `lag`, to the nearest m-epoch within tolerance.

    When several fixes land on one epoch the closest is kept (the later one on a tie).
    """
    aligned: Dict[int, GnssFix] = {}
    offsets: Dict[int, float] = {}
    if len(epochs) == 0:
        return aligned
    outside = collided = 0
    for fix in gnss.fixes():
        t = fix.t - lag
        k = int(np.searchsorted(epochs, t))
        if k >= len(epochs) or (k > 0 and t - epochs[k - 1] <= epochs[k] - t):
            k -= 1
        offset = abs(epochs[k] - t)
        if offset > tolerance:
            outside += 1
            continue
        if k in aligned:
            collided += 1
            if offset > offsets[k]:
                continue
        aligned[k] = fix
        offsets[k] = offset

    if outside:
        logger.warning(f"{outside} GNSS fixes fell outside the run and were dropped")
    if collided:
        logger.warning(f"{collided} GNSS fixes shared an m-epoch with a closer fix and were dropped")
    return aligned


def initial_state(truth: pd.DataFrame, config: RunConfig) -> NavState:
    """Truth at t0 with the configured attitude seeding errors."""
    row = truth.iloc[0]
    align = config.align
    euler = EulerAngles(
        float(row["roll"]) + math.radians(align.init_roll_error_deg),
        float(row["pitch"]) + math.radians(align.init_pitch_error_deg),
        float(row["heading"]) + math.radians(align.init_heading_error_deg),
    )
    return NavState(
        lat=float(row["lat"]),
        lon=float(row["lon"]),
        alt=float(row["h"]),
        v_n=float(row["vn"]),
        v_e=float(row["ve"]),
        v_d=float(row["vd"]),
        q=euler_to_quat(euler),
    )


class Navigator(LoggerMixin):
    """Drives IMU compensation, GNSS alignment and one filter over a dataset."""

    def __init__(self, config: RunConfig):
        self.config = config
        mech = config.mech
        self.earth = EarthModel(R=mech.earth_radius, g_bar=mech.gravity, omega_e=mech.earth_rate)

    def _make_stepper(self, nav: NavState, truth: TruthLookup) -> Stepper:
        name = self.config.filter
        if name == "ins":
            return InsStepper(nav, self.config, self.earth)
        elif name == "eskf":
            return EskfStepper(nav, self.config, self.earth)
        elif name == "comp":
            return CompStepper(nav, self.config, self.earth, truth)
        elif name == "gd":
            return GdStepper(nav, self.config, self.earth, truth)
        raise DatasetError(f"Unknown filter '{name}'")

    def run(self, bundle: DatasetBundle, output_dir: Optional[Union[str, Path]] = None) -> RunResult:
        start = time.time()
        out = Path(output_dir or self.config.output_dir)
        name = self.config.filter

        errors = bundle.validate(require_truth=True)
        if errors:
            return RunResult.failure(f"Invalid dataset {bundle.root}", "; ".join(errors), filter_name=name)

        imu = io.read_imu(bundle)
        gnss = io.read_gnss(bundle)
        truth = io.read_truth(bundle)
        self.logger.info(f"Loaded {bundle}: {len(imu)} IMU rows, {len(gnss)} fixes; filter '{name}'")

        imu_cfg = self.config.imu
        epochs = epoch_times(imu, imu_cfg.l_per_m)
        tolerance = 0.5 * imu_cfg.l_per_m * imu.dT + 1e-9
        fixes = align_fixes(gnss, epochs, self.config.align.gnss_lag, tolerance)

        compensator = IncrementCompensator(
            imu_cfg.l_per_m, imu_cfg.coning, imu_cfg.sculling, imu_cfg.rotation_compensation
        )
        stepper = self._make_stepper(initial_state(truth, self.config), TruthLookup(truth))

        rows: List[list] = []
        innovations: List[list] = []
        partial = False
        last_good: Optional[float] = None

        def process(inc) -> None:
            k = len(rows)
            t = float(epochs[k])
            stepper.step(inc, fixes.get(k), t)
            rows.append(stepper.row(t))
            if stepper.innovations is not None:
                innovations.append([t] + [stepper.innovations[label] for label in INNOVATION_COLUMNS[1:]])

        try:
            for sample in imu.samples():
                inc = compensator.push(sample, stepper.biases)
                if inc is not None:
                    process(inc)
                    last_good = rows[-1][0]
            inc = compensator.flush()
            if inc is not None:
                partial = True
                process(inc)
                last_good = rows[-1][0]
        except DivergenceError as e:
            e.epoch = last_good
            self.logger.error(f"Filter '{name}' diverged: {e}", extra={"epoch": last_good})
            outputs, metrics = self._write_outputs(out, rows, innovations, truth)
            return RunResult.diverged(
                f"{name} diverged: {e}",
                last_good,
                filter_name=name,
                epochs=len(rows),
                metrics=metrics,
                outputs=outputs,
                error_details=type(e).__name__,
                execution_time_ms=int((time.time() - start) * 1000),
            )

        outputs, metrics = self._write_outputs(out, rows, innovations, truth)
        return RunResult.success(
            f"{name}: {len(rows)} epochs written to {out}",
            filter_name=name,
            epochs=len(rows),
            last_good_epoch=last_good,
            partial_interval=partial,
            metrics=metrics,
            outputs=outputs,
            execution_time_ms=int((time.time() - start) * 1000),
        )

    def _write_outputs(
        self, out: Path, rows: List[list], innovations: List[list], truth: pd.DataFrame
    ) -> Tuple[Dict[str, str], Dict[str, float]]:
        out.mkdir(parents=True, exist_ok=True)
        estimate = pd.DataFrame(rows, columns=ESTIMATE_COLUMNS)
        metrics = compute_metrics(estimate, truth, self.config.convergence_threshold_deg, self.earth)
        metrics_df = pd.DataFrame([{"filter": self.config.filter, "epochs": len(rows), **metrics}])

        outputs = {
            "estimate": str(io.write_frame(estimate, out / io.ESTIMATE_FILE)),
            "metrics": str(io.write_frame(metrics_df, out / io.METRICS_FILE)),
        }
        if innovations:
            frame = pd.DataFrame(innovations, columns=INNOVATION_COLUMNS)
            outputs["innovations"] = str(io.write_frame(frame, out / io.INNOVATIONS_FILE))
        cfg_path = out / io.RUN_CONFIG_FILE
        cfg_path.write_text(self.config.to_kv_text(), encoding="utf-8")
        outputs["config"] = str(cfg_path)
        self.logger.info(f"Wrote {', '.join(sorted(outputs))} to {out}")
        return outputs, metrics
