"""Application settings: TOML file, .env and environment variables.

Precedence, lowest first: dataclass defaults, the settings TOML
(``config/strapnav-common.toml`` unless ``--settings`` names another),
then ``STRAPNAV_*`` variables, which python-dotenv may have loaded from ``.env``.
"""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib

from dotenv import load_dotenv

from strapnav.utils.errors import ConfigError

DEFAULT_SETTINGS = Path(__file__).resolve().parents[2] / "config" / "strapnav-common.toml"

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _flag(text: str) -> bool:
    return text.strip().lower() in ("true", "1", "yes", "on")


# env var -> (field, parser)
_ENV: Dict[str, Tuple[str, Callable[[str], Any]]] = {
    "STRAPNAV_DEBUG": ("debug", _flag),
    "STRAPNAV_LOG_LEVEL": ("log_level", str.upper),
    "STRAPNAV_LOG_FILE": ("log_file", str),
}


@dataclass
class AppConfig:
    """Process-wide settings; ``run_defaults`` seeds every RunConfig."""

    debug: bool = False
    log_level: str = "INFO"
    log_file: Optional[str] = None
    run_defaults: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def load(cls, config_path: Optional[str] = None, env_file: Optional[str] = None) -> "AppConfig":
        if env_file:
            load_dotenv(env_file)
        else:
            load_dotenv()

        config = cls()
        path = Path(config_path) if config_path else DEFAULT_SETTINGS
        if path.is_file():
            config._apply_toml(cls._read_toml(path))
        elif config_path:
            raise ConfigError(f"Settings file not found: {config_path}")

        for var, (name, parse) in _ENV.items():
            raw = os.getenv(var)
            if raw:
                setattr(config, name, parse(raw))
        return config

    @staticmethod
    def _read_toml(path: Path) -> Dict[str, Any]:
        try:
            return tomllib.loads(path.read_text(encoding="utf-8"))
        except tomllib.TOMLDecodeError as e:
            raise ConfigError(f"Invalid TOML in {path}: {e}") from None

    def _apply_toml(self, data: Dict[str, Any]) -> None:
        app = data.get("app", {})
        for name in ("debug", "log_level", "log_file"):
            if name in app:
                setattr(self, name, app[name])
        self.run_defaults = dict(data.get("run", {}))

    def validate(self) -> List[str]:
        """Validate configuration and return list of errors."""
        from .run_config import RunConfig

        errors = []
        if str(self.log_level).upper() not in LOG_LEVELS:
            errors.append(f"Unknown log_level '{self.log_level}' (choose from {', '.join(LOG_LEVELS)})")
        known = RunConfig.keys()
        errors.extend(f"[run] section: unknown key '{key}'" for key in self.run_defaults if key not in known)
        return errors
