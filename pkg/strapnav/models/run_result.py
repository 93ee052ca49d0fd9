"""RunResult model for filter run outcomes."""

from dataclasses import dataclass, field
from typing import Optional, Any, Dict
from datetime import datetime
from enum import Enum


class RunStatus(Enum):
    """Outcome of a run, mapped onto process exit codes."""
    SUCCESS = "success"
    INPUT_ERROR = "input_error"
    DIVERGED = "diverged"

    @property
    def exit_code(self) -> int:
        return {"success": 0, "input_error": 2, "diverged": 3}[self.value]


@dataclass
class RunResult:
    """Result of running a filter over a dataset."""

    status: RunStatus = RunStatus.SUCCESS
    message: str = ""

    filter_name: str = ""
    epochs: int = 0
    last_good_epoch: Optional[float] = None
    partial_interval: bool = False

    metrics: Dict[str, float] = field(default_factory=dict)
    outputs: Dict[str, str] = field(default_factory=dict)

    error_details: Optional[str] = None
    execution_time_ms: int = 0
    timestamp: datetime = field(default_factory=datetime.now)

    @property
    def is_success(self) -> bool:
        return self.status == RunStatus.SUCCESS

    @property
    def exit_code(self) -> int:
        return self.status.exit_code

    @classmethod
    def success(cls, message: str, **kwargs) -> "RunResult":
        return cls(status=RunStatus.SUCCESS, message=message, **kwargs)

    @classmethod
    def failure(cls, message: str, error_details: str = None, **kwargs) -> "RunResult":
        return cls(status=RunStatus.INPUT_ERROR, message=message, error_details=error_details, **kwargs)

    @classmethod
    def diverged(cls, message: str, last_good_epoch: Optional[float], **kwargs) -> "RunResult":
        return cls(status=RunStatus.DIVERGED, message=message, last_good_epoch=last_good_epoch, **kwargs)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status.value,
            "message": self.message,
            "filter": self.filter_name,
            "epochs": self.epochs,
            "last_good_epoch": self.last_good_epoch,
            "partial_interval": self.partial_interval,
            "metrics": dict(self.metrics),
            "outputs": dict(self.outputs),
            "error_details": self.error_details,
            "execution_time_ms": self.execution_time_ms,
            "timestamp": self.timestamp.isoformat(),
        }

    def __str__(self) -> str:
        return f"[{self.status.value.upper()}] {self.message}"

    def __repr__(self) -> str:
        return f"RunResult(status={self.status.value}, filter={self.filter_name}, epochs={self.epochs})"
