"""Metrics collection for computation runs."""

from __future__ import annotations

import time
from dataclasses import dataclass, field


@dataclass
class RunMetrics:
    """Collects timing and work counters during a CLI command or suite run."""

    matrices_reduced: int = 0
    pivots: int = 0
    checks_passed: int = 0
    checks_failed: int = 0
    failures: list[dict[str, object]] = field(default_factory=list)
    _start_time: float = field(default=0.0, repr=False)
    _end_time: float = field(default=0.0, repr=False)

    def start(self) -> None:
        self._start_time = time.perf_counter()

    def stop(self) -> None:
        self._end_time = time.perf_counter()

    @property
    def duration(self) -> float:
        if self._end_time == 0.0:
            return time.perf_counter() - self._start_time
        return self._end_time - self._start_time

    def record_failure(self, check: str, detail: str) -> None:
        self.failures.append({"check": check, "detail": detail})

    def to_dict(self) -> dict[str, object]:
        return {
            "matrices_reduced": self.matrices_reduced,
            "pivots": self.pivots,
            "checks_passed": self.checks_passed,
            "checks_failed": self.checks_failed,
            "duration_seconds": round(self.duration, 3),
        }
