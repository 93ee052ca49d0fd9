"""Simulation specs loaded from key=value files."""

import math
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Dict, List, Tuple, Type, TypeVar, Union

from strapnav.config.kv import coerce, format_kv, parse_kv_file
from strapnav.utils.errors import ConfigError

Vec3 = Tuple[float, float, float]

TRAJECTORY_KINDS = ("stationary", "rotation", "coning", "sculling", "circular", "accelerate")

KIND_ALIASES = {
    "stationary": "stationary",
    "static": "stationary",
    "rotation": "rotation",
    "constant-rate-rotation": "rotation",
    "coning": "coning",
    "sculling": "sculling",
    "circular": "circular",
    "circular-path": "circular",
    "accelerate": "accelerate",
}

S = TypeVar("S")


def _load(cls: Type[S], entries: Dict[str, Any], source: str) -> S:
    """Build a spec from raw entries; 3-vectors accept one value for all axes."""
    probe = cls()
    known = {f.name for f in fields(cls)}
    kwargs: Dict[str, Any] = {}
    for key, raw in entries.items():
        if key not in known:
            raise ConfigError(f"{source}: unknown key '{key}'")
        typ = type(getattr(probe, key))
        value = coerce(key, raw, typ)
        if typ is tuple:
            if len(value) == 1:
                value = value * 3
            elif len(value) != 3:
                raise ConfigError(f"{source}: '{key}' needs 1 or 3 values, got {len(value)}")
        kwargs[key] = value
    spec = cls(**kwargs)
    errors = spec.validate()
    if errors:
        raise ConfigError(f"{source}: " + "; ".join(errors))
    return spec


class _KvSpec:
    @classmethod
    def from_dict(cls, entries: Dict[str, Any], source: str = "<spec>"):
        return _load(cls, entries, source)

    @classmethod
    def from_kv_file(cls, path: Union[str, Path]):
        return _load(cls, parse_kv_file(path), str(path))

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_kv_text(self) -> str:
        return format_kv(self.to_dict())

    def validate(self) -> List[str]:
        return []


@dataclass(frozen=True)
class TrajectorySpec(_KvSpec):
    """Trajectory kind, timing and initial state. Angles in degrees, rates in SI unless named."""

    kind: str = "stationary"
    duration: float = 60.0
    l_rate: float = 1000.0

    # Initial state
    lat_deg: float = 45.0
    lon_deg: float = 0.0
    alt: float = 0.0
    velocity: Vec3 = (0.0, 0.0, 0.0)
    roll_deg: float = 0.0
    pitch_deg: float = 0.0
    heading_deg: float = 0.0

    # rotation
    axis: Vec3 = (0.0, 0.0, 1.0)
    rate_dps: float = 10.0

    # coning / sculling
    amplitude: float = 0.01
    frequency: float = 20.0
    accel_amplitude: float = 1.0

    # circular
    radius: float = 100.0
    speed: float = 10.0

    # accelerate
    accel: Vec3 = (1.0, 0.0, 0.0)
    accel_start: float = 0.0
    accel_duration: float = 5.0

    def __post_init__(self):
        object.__setattr__(self, "kind", KIND_ALIASES.get(self.kind.strip().lower(), self.kind))

    @property
    def n_samples(self) -> int:
        return int(round(self.duration * self.l_rate))

    @property
    def dT(self) -> float:
        return 1.0 / self.l_rate

    def validate(self) -> List[str]:
        errors = []
        if self.kind not in TRAJECTORY_KINDS:
            errors.append(f"unsupported trajectory kind '{self.kind}' (choose from {', '.join(TRAJECTORY_KINDS)})")
        if not self.duration > 0:
            errors.append("duration must be > 0")
        if not self.l_rate > 0:
            errors.append("l_rate must be > 0")
        if not abs(self.lat_deg) < 89.0:
            errors.append("lat_deg must be within (-89, 89)")
        if self.kind == "rotation":
            if not self.rate_dps > 0:
                errors.append("rate_dps must be > 0")
            if math.sqrt(sum(a * a for a in self.axis)) == 0:
                errors.append("axis must be nonzero")
        if self.kind in ("coning", "sculling") and not self.frequency > 0:
            errors.append("frequency must be > 0")
        if self.kind == "circular":
            if not self.radius > 0:
                errors.append("radius must be > 0")
            if not self.speed > 0:
                errors.append("speed must be > 0")
        if self.kind == "accelerate" and (self.accel_start < 0 or self.accel_duration < 0):
            errors.append("accel_start and accel_duration must be >= 0")
        return errors


@dataclass(frozen=True)
class SensorErrorSpec(_KvSpec):
    """Per-axis sensor error magnitudes in datasheet units."""

    gyro_bias_dph: Vec3 = (0.0, 0.0, 0.0)
    gyro_arw: Vec3 = (0.0, 0.0, 0.0)                      # deg/sqrt(hr)
    gyro_bias_instability_dph: Vec3 = (0.0, 0.0, 0.0)
    gyro_bias_tau: float = 100.0                          # s
    gyro_rrw: Vec3 = (0.0, 0.0, 0.0)                      # deg/hr^1.5

    accel_bias: Vec3 = (0.0, 0.0, 0.0)                    # m/s^2
    accel_vrw: Vec3 = (0.0, 0.0, 0.0)                     # m/s^2/sqrt(Hz)
    accel_bias_instability: Vec3 = (0.0, 0.0, 0.0)        # m/s^2
    accel_bias_tau: float = 100.0                         # s
    accel_rw: Vec3 = (0.0, 0.0, 0.0)                      # m/s^2.5

    seed: int = 0

    def validate(self) -> List[str]:
        errors = []
        for name in ("gyro_arw", "gyro_bias_instability_dph", "gyro_rrw",
                     "accel_vrw", "accel_bias_instability", "accel_rw"):
            if any(v < 0 for v in getattr(self, name)):
                errors.append(f"{name} must be >= 0")
        for name in ("gyro_bias_tau", "accel_bias_tau"):
            if not getattr(self, name) > 0:
                errors.append(f"{name} must be > 0")
        return errors


@dataclass(frozen=True)
class GnssSpec(_KvSpec):
    """Fix rate, per-axis NED noise and constant receiver time skew."""

    rate: float = 1.0
    pos_sigma: Vec3 = (1.0, 1.0, 2.0)
    vel_sigma: Vec3 = (0.1, 0.1, 0.1)
    skew: float = 0.0
    seed: int = 0

    def validate(self) -> List[str]:
        errors = []
        if not self.rate > 0:
            errors.append("rate must be > 0")
        if any(v < 0 for v in self.pos_sigma + self.vel_sigma):
            errors.append("sigmas must be >= 0")
        return errors
