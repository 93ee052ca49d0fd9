"""Flat key=value text format shared by run configs, sim specs and dataset metadata."""

from pathlib import Path
from typing import Any, Dict, Tuple, Union

from strapnav.utils.errors import ConfigError

_TRUE = ("true", "1", "yes", "on")
_FALSE = ("false", "0", "no", "off")


def parse_kv_text(text: str, source: str = "<text>") -> Dict[str, str]:
    """Parse `key = value` lines. `#` starts a comment; keys must be unique."""
    entries: Dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got '{raw.strip()}'")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError(f"{source}:{lineno}: empty key")
        if key in entries:
            raise ConfigError(f"{source}:{lineno}: duplicate key '{key}'")
        entries[key] = value
    return entries


def parse_kv_file(path: Union[str, Path]) -> Dict[str, str]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigError(f"File not found: {path}") from None
    except OSError as e:
        raise ConfigError(f"Cannot read {path}: {e}") from None
    return parse_kv_text(text, source=str(path))


def parse_override(item: str) -> Tuple[str, str]:
    """Split a CLI `key=value` override."""
    if "=" not in item:
        raise ConfigError(f"Override '{item}' must look like key=value")
    key, value = (part.strip() for part in item.split("=", 1))
    return key, value


def coerce(key: str, value: Any, typ: type) -> Any:
    """Convert a raw value to `typ` (bool, int, float, str or tuple of floats)."""
    if not isinstance(value, str):
        if typ is tuple:
            values = value if isinstance(value, (list, tuple)) else [value]
            return tuple(float(v) for v in values)
        if typ is float and isinstance(value, (int, float)) and not isinstance(value, bool):
            return float(value)
        if isinstance(value, typ):
            return value
        value = str(value)
    text = value.strip()
    try:
        if typ is bool:
            if text.lower() in _TRUE:
                return True
            if text.lower() in _FALSE:
                return False
            raise ValueError(text)
        if typ is int:
            return int(text)
        if typ is float:
            return float(text)
        if typ is tuple:
            return tuple(float(part) for part in text.split(","))
        return text
    except ValueError:
        raise ConfigError(f"Invalid value for '{key}': '{value}' (expected {typ.__name__})") from None


def format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return ",".join(format_value(v) for v in value)
    return str(value)


def format_kv(entries: Dict[str, Any]) -> str:
    return "".join(f"{key} = {format_value(value)}\n" for key, value in entries.items())
