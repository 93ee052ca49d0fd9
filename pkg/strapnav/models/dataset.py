"""DatasetBundle model: the files produced by `sim` and consumed by `run`."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Union

IMU_FILE = "imu.csv"
GNSS_FILE = "gnss.csv"
TRUTH_FILE = "truth.csv"
META_FILE = "meta.txt"


@dataclass
class DatasetBundle:
    """A simulated dataset directory."""

    root: Path
    meta: Dict[str, str] = field(default_factory=dict)

    @property
    def imu_path(self) -> Path:
        return self.root / IMU_FILE

    @property
    def gnss_path(self) -> Path:
        return self.root / GNSS_FILE

    @property
    def truth_path(self) -> Path:
        return self.root / TRUTH_FILE

    @property
    def meta_path(self) -> Path:
        return self.root / META_FILE

    @property
    def l_rate(self) -> float:
        return float(self.meta["l_rate"])

    @property
    def seed(self) -> int:
        return int(self.meta.get("seed", 0))

    @classmethod
    def from_dir(cls, root: Union[str, Path]) -> "DatasetBundle":
        from strapnav.config.kv import parse_kv_file

        bundle = cls(Path(root))
        if bundle.meta_path.exists():
            bundle.meta = parse_kv_file(bundle.meta_path)
        return bundle

    def validate(self, require_truth: bool = True) -> List[str]:
        """Validate presence of files and metadata; returns a list of errors."""
        errors = []
        if not self.root.is_dir():
            return [f"Dataset directory not found: {self.root}"]
        required = [self.imu_path, self.gnss_path, self.meta_path]
        if require_truth:
            required.append(self.truth_path)
        for path in required:
            if not path.exists():
                errors.append(f"Missing file: {path}")
        if self.meta_path.exists():
            try:
                if self.l_rate <= 0:
                    errors.append("meta: l_rate must be positive")
            except (KeyError, ValueError):
                errors.append("meta: l_rate missing or not a number")
        return errors

    def __str__(self) -> str:
        return f"DatasetBundle({self.root})"
