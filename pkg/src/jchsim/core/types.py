"""Core data types for sweep execution."""

from dataclasses import dataclass
from typing import Optional


@dataclass
class SweepConfig:
    """Configuration for evaluating independent sweep points."""

    jobs: int = 1
    timeout_seconds: Optional[float] = None  # None = unlimited

    def __post_init__(self) -> None:
        """Validate sweep configuration."""
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.timeout_seconds is not None and self.timeout_seconds <= 0:
            raise ValueError("timeout_seconds must be > 0 or None")


@dataclass
class SweepMetrics:
    """Metrics collected while running a sweep."""

    items: int
    elapsed_seconds: float
    workers_used: int

    @property
    def points_per_second(self) -> float:
        return self.items / self.elapsed_seconds if self.elapsed_seconds > 0 else 0.0

    @property
    def formatted_rate(self) -> str:
        """Human-readable sweep rate."""
        if self.points_per_second >= 1_000:
            return f"{self.points_per_second / 1_000:.2f} K points/sec"
        return f"{self.points_per_second:.2f} points/sec"
