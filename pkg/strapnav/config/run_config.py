"""Run configuration: every filter and pipeline tunable under one flat key."""

from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Optional, Set, Tuple, Union

from strapnav.utils.errors import ConfigError
from .kv import coerce, format_kv, parse_kv_file

FILTERS = ("ins", "eskf", "comp", "gd")

FILTER_ALIASES = {
    "ins": "ins",
    "ins-only": "ins",
    "eskf": "eskf",
    "comp": "comp",
    "complementary": "comp",
    "gd": "gd",
    "gradient-descent": "gd",
}


@dataclass
class ImuConfig:
    """High-rate compensation settings."""
    l_per_m: int = 10
    coning: bool = True
    sculling: bool = True
    rotation_compensation: bool = True


@dataclass
class MechConfig:
    """Mechanization and Earth model."""
    earth_radius: float = 6.37e6
    gravity: float = 9.80665
    earth_rate: float = 7.292115e-5
    full_coriolis: bool = False
    fast_atan: bool = True


@dataclass
class EskfConfig:
    """Error-state filter tuning."""

    # Initial 1-sigma values
    p0_gyro_bias_dph: float = 50.0
    p0_accel_bias: float = 0.05
    p0_tilt_deg: float = 5.0
    p0_vel: float = 1.0
    p0_pos: float = 5.0
    p0_alt: float = 5.0

    # Process noise densities (units^2 per second)
    q_gyro_bias: float = 1e-14
    q_accel_bias: float = 1e-8
    q_tilt: float = 1e-9
    q_vel: float = 1e-4
    q_pos: float = 0.0

    # GNSS measurement 1-sigma
    gnss_vel_sigma: float = 0.1
    gnss_pos_sigma: float = 1.0
    gnss_alt_sigma: float = 2.0


@dataclass
class AlignConfig:
    """GNSS time alignment and initial-state seeding."""
    gnss_lag: float = 0.0
    init_roll_error_deg: float = 0.0
    init_pitch_error_deg: float = 0.0
    init_heading_error_deg: float = 0.0


@dataclass
class CompConfig:
    """Complementary filter PI gains."""
    kp: float = 1.0
    ki: float = 0.1
    psi_ref_noise_deg: float = 0.0


@dataclass
class GdConfig:
    """Gradient-descent filter settings."""
    beta: float = 0.1
    mag_inclination_deg: float = 60.0


# Keys that only make sense for one filter.
_FILTER_SECTIONS = {
    "eskf": "eskf",
    "comp": "comp",
    "gd": "gd",
}


@dataclass
class RunConfig:
    """Complete configuration of a `run` invocation."""

    imu: ImuConfig = field(default_factory=ImuConfig)
    mech: MechConfig = field(default_factory=MechConfig)
    eskf: EskfConfig = field(default_factory=EskfConfig)
    align: AlignConfig = field(default_factory=AlignConfig)
    comp: CompConfig = field(default_factory=CompConfig)
    gd: GdConfig = field(default_factory=GdConfig)

    filter: str = "eskf"
    output_dir: str = "out"
    seed: int = 0
    convergence_threshold_deg: float = 0.5

    explicit_keys: Set[str] = field(default_factory=set, repr=False, compare=False)

    @classmethod
    def keys(cls) -> Dict[str, Tuple[Optional[str], type]]:
        """Map every flat key to (section attribute or None, value type)."""
        registry: Dict[str, Tuple[Optional[str], type]] = {}
        probe = cls()
        for f in fields(cls):
            if f.name == "explicit_keys":
                continue
            value = getattr(probe, f.name)
            if hasattr(value, "__dataclass_fields__"):
                for sub in fields(value):
                    registry[sub.name] = (f.name, type(getattr(value, sub.name)))
            else:
                registry[f.name] = (None, type(value))
        return registry

    @classmethod
    def from_file(cls, path: Union[str, Path], defaults: Optional[Dict[str, Any]] = None) -> "RunConfig":
        config = cls()
        if defaults:
            config.update(defaults, explicit=False)
        config.update(parse_kv_file(path))
        return config

    def update(self, entries: Dict[str, Any], explicit: bool = True) -> "RunConfig":
        registry = self.keys()
        for key, raw in entries.items():
            if key not in registry:
                raise ConfigError(f"Unknown config key '{key}'")
            section, typ = registry[key]
            value = coerce(key, raw, typ)
            if key == "filter":
                value = self._normalize_filter(value)
            target = getattr(self, section) if section else self
            setattr(target, key, value)
            if explicit:
                self.explicit_keys.add(key)
        return self

    def get(self, key: str) -> Any:
        section, _ = self.keys()[key]
        return getattr(getattr(self, section) if section else self, key)

    @staticmethod
    def _normalize_filter(name: str) -> str:
        try:
            return FILTER_ALIASES[name.strip().lower()]
        except KeyError:
            raise ConfigError(f"Unknown filter '{name}' (choose from {', '.join(FILTERS)})") from None

    def validate(self) -> List[str]:
        """Validate configuration and return list of errors."""
        errors = []
        registry = self.keys()

        for key in sorted(self.explicit_keys):
            section = registry[key][0]
            owner = _FILTER_SECTIONS.get(section or "")
            if owner and owner != self.filter:
                errors.append(f"'{key}' only applies to filter '{owner}', not '{self.filter}'")

        if self.imu.l_per_m < 1:
            errors.append("l_per_m must be >= 1")
        for key in ("earth_radius", "gravity", "earth_rate"):
            if not self.get(key) > 0:
                errors.append(f"{key} must be positive")
        if self.comp.kp <= 0:
            errors.append("kp must be > 0")
        if self.comp.ki < 0:
            errors.append("ki must be >= 0")
        if self.gd.beta < 0:
            errors.append("beta must be >= 0")
        for key, (section, typ) in registry.items():
            if section == "eskf" and self.get(key) < 0:
                errors.append(f"{key} must be >= 0")
        if self.comp.psi_ref_noise_deg < 0:
            errors.append("psi_ref_noise_deg must be >= 0")
        if self.convergence_threshold_deg <= 0:
            errors.append("convergence_threshold_deg must be > 0")

        return errors

    def to_dict(self) -> Dict[str, Any]:
        return {key: self.get(key) for key in self.keys()}

    def to_kv_text(self) -> str:
        return format_kv(self.to_dict())
