"""strapnav utilities."""

from .logger import get_logger, setup_logging, LoggerMixin
from .errors import (
    StrapnavError,
    ConfigError,
    DatasetError,
    DomainError,
    ContractViolation,
    DivergenceError,
    QuaternionNormError,
    CovarianceCollapseError,
    PolarSingularityError,
)
from .units import UNITS, to_si, from_si, STANDARD_GRAVITY

__all__ = [
    "get_logger",
    "setup_logging",
    "LoggerMixin",
    "StrapnavError",
    "ConfigError",
    "DatasetError",
    "DomainError",
    "ContractViolation",
    "DivergenceError",
    "QuaternionNormError",
    "CovarianceCollapseError",
    "PolarSingularityError",
    "UNITS",
    "to_si",
    "from_si",
    "STANDARD_GRAVITY",
]
