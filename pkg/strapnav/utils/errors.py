"""Exception hierarchy; each class maps to a CLI exit code."""

from typing import Optional


class StrapnavError(Exception):
    """Base class for all strapnav errors."""
    exit_code = 1


class ConfigError(StrapnavError):
    """Invalid configuration or simulation spec."""
    exit_code = 2


class DatasetError(ConfigError):
    """Missing or malformed dataset files."""


class DomainError(StrapnavError, ValueError):
    """Argument outside the mathematical domain of an operation."""
    exit_code = 2


class ContractViolation(StrapnavError, ValueError):
    """Caller broke an API contract."""
    exit_code = 2


class DivergenceError(StrapnavError):
    """Numerical divergence of the navigation solution."""
    exit_code = 3

    def __init__(self, message: str, epoch: Optional[float] = None):
        super().__init__(message)
        self.epoch = epoch


class QuaternionNormError(DivergenceError):
    """Quaternion norm left the first-order normalization domain."""


class CovarianceCollapseError(DivergenceError):
    """Innovation variance became non-positive."""


class PolarSingularityError(DivergenceError):
    """Latitude too close to a pole for the flat-rate position update."""
