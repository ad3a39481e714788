"""Acceptance suite for the (co)homology toolkit."""

from __future__ import annotations

from rackhom.verification.base import Check, CorpusEntry, SuiteContext
from rackhom.verification.checks import CHECKS
from rackhom.verification.suite import CheckResult, SuiteReport, VerificationSuite, build_checks

__all__ = [
    "CHECKS",
    "Check",
    "CheckResult",
    "CorpusEntry",
    "SuiteContext",
    "SuiteReport",
    "VerificationSuite",
    "build_checks",
]
