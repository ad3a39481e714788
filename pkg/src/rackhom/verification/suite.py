"""Suite orchestrator: runs the acceptance checks over the configured corpus."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from rackhom.config import RackhomConfig
from rackhom.errors import RackhomError
from rackhom.observability.logger import get_logger
from rackhom.verification.base import Check, SuiteContext
from rackhom.verification.checks import CHECKS

logger = get_logger(__name__, json_format=False)


@dataclass
class CheckResult:
    name: str
    failures: list[str]
    seconds: float

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class SuiteReport:
    results: list[CheckResult] = field(default_factory=list)
    metrics: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def body(self) -> dict[str, object]:
        """Pass/fail outcome without timings."""
        return {
            "passed": self.passed,
            "checks": [
                {"name": r.name, "passed": r.passed, "failures": r.failures}
                for r in self.results
            ],
        }

    def to_dict(self) -> dict[str, object]:
        return {
            **self.body(),
            "timing": {
                "checks": {r.name: round(r.seconds, 3) for r in self.results},
                **self.metrics,
            },
        }


def build_checks(names: Sequence[str] | None = None) -> list[Check]:
    """Instantiate the named checks (all of them when ``names`` is None)."""
    available = {check.name: check for check in CHECKS}
    if names is None:
        return [check() for check in CHECKS]
    unknown = [name for name in names if name not in available]
    if unknown:
        raise ValueError(f"Unknown checks {unknown}; expected some of {sorted(available)}")
    return [available[name]() for name in names]


class VerificationSuite:
    """Runs each check in turn and records failures in the run metrics."""

    def __init__(self, config: RackhomConfig, checks: Sequence[Check] | None = None) -> None:
        self.config = config
        self.checks = list(checks) if checks is not None else build_checks()
        self.context = SuiteContext(config)

    def run(self) -> SuiteReport:
        metrics = self.context.metrics
        metrics.start()
        report = SuiteReport()
        logger.info(
            "Verification starting: %d checks over %d corpus members",
            len(self.checks),
            len(self.config.corpus),
        )
        try:
            for check in self.checks:
                started = time.perf_counter()
                try:
                    failures = check.run(self.context)
                except RackhomError as e:
                    failures = [f"raised {type(e).__name__}: {e}"]
                result = CheckResult(check.name, failures, time.perf_counter() - started)
                report.results.append(result)
                if result.passed:
                    metrics.checks_passed += 1
                    logger.info("✓ %s", check.name, extra={"check": check.name})
                else:
                    metrics.checks_failed += 1
                    for detail in failures:
                        metrics.record_failure(check.name, detail)
                    logger.warning(
                        "✗ %s: %d failures",
                        check.name,
                        len(failures),
                        extra={"check": check.name},
                    )
        finally:
            metrics.stop()
        report.metrics = metrics.to_dict()
        logger.info("Verification complete: %s", "passed" if report.passed else "FAILED")
        return report
