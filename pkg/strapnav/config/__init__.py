"""strapnav configuration."""

from .app_config import AppConfig
from .run_config import (
    RunConfig,
    ImuConfig,
    MechConfig,
    EskfConfig,
    AlignConfig,
    CompConfig,
    GdConfig,
    FILTERS,
)
from .kv import parse_kv_text, parse_kv_file, parse_override, format_kv

__all__ = [
    "AppConfig",
    "RunConfig",
    "ImuConfig",
    "MechConfig",
    "EskfConfig",
    "AlignConfig",
    "CompConfig",
    "GdConfig",
    "FILTERS",
    "parse_kv_text",
    "parse_kv_file",
    "parse_override",
    "format_kv",
]
