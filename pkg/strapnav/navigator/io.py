"""CSV reading and writing for datasets and run outputs."""

from pathlib import Path
from typing import Dict, List, Union

import pandas as pd

from strapnav.config.kv import format_kv
from strapnav.models.dataset import DatasetBundle
from strapnav.sim import GNSS_COLUMNS, IMU_COLUMNS, TRUTH_COLUMNS, GnssLog, ImuLog, Truth
from strapnav.utils.errors import DatasetError
from strapnav.utils.logger import get_logger

logger = get_logger("io")

FLOAT_FORMAT = "%.17g"

ESTIMATE_FILE = "estimate.csv"
METRICS_FILE = "metrics.csv"
INNOVATIONS_FILE = "innovations.csv"
RUN_CONFIG_FILE = "run.cfg"
COMPARISON_FILE = "comparison.csv"


def write_frame(df: pd.DataFrame, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(path, index=False, float_format=FLOAT_FORMAT, encoding="utf-8", lineterminator="\n")
    return path


def read_frame(path: Union[str, Path], columns: List[str], allow_nan: bool = False) -> pd.DataFrame:
    """Read a headered CSV and check its column order."""
    path = Path(path)
    try:
        df = pd.read_csv(path, encoding="utf-8")
    except FileNotFoundError:
        raise DatasetError(f"Missing file: {path}") from None
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise DatasetError(f"Cannot parse {path}: {e}") from None
    if list(df.columns) != columns:
        raise DatasetError(f"{path}: expected columns {','.join(columns)}, got {','.join(map(str, df.columns))}")
    if not allow_nan and df.isna().any().any():
        raise DatasetError(f"{path}: empty or non-numeric cells")
    t = df["t"].to_numpy(float)
    if len(t) > 1 and not (t[1:] > t[:-1]).all():
        raise DatasetError(f"{path}: time column is not strictly increasing")
    return df


def write_dataset(
    root: Union[str, Path],
    truth: Truth,
    imu: ImuLog,
    gnss: GnssLog,
    meta: Dict[str, object],
) -> DatasetBundle:
    bundle = DatasetBundle(Path(root), {k: str(v) for k, v in meta.items()})
    bundle.root.mkdir(parents=True, exist_ok=True)
    write_frame(imu.to_frame(), bundle.imu_path)
    write_frame(gnss.to_frame(), bundle.gnss_path)
    write_frame(truth.to_frame(), bundle.truth_path)
    bundle.meta_path.write_text(format_kv(meta), encoding="utf-8")
    logger.info(f"Wrote dataset to {bundle.root} ({len(imu)} IMU rows, {len(gnss)} fixes)")
    return bundle


def read_imu(bundle: DatasetBundle) -> ImuLog:
    df = read_frame(bundle.imu_path, IMU_COLUMNS)
    return ImuLog(
        t=df["t"].to_numpy(float),
        w=df[["wx", "wy", "wz"]].to_numpy(float),
        f=df[["fx", "fy", "fz"]].to_numpy(float),
        dT=1.0 / bundle.l_rate,
    )


def read_gnss(bundle: DatasetBundle) -> GnssLog:
    return GnssLog.from_frame(read_frame(bundle.gnss_path, GNSS_COLUMNS))


def read_truth(bundle: DatasetBundle) -> pd.DataFrame:
    return read_frame(bundle.truth_path, TRUTH_COLUMNS)
