"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from rackhom.algebra.table import Violation


class RackhomError(Exception):
    """Base class for all rackhom errors."""


class MalformedTableError(RackhomError, ValueError):
    """A table or index map is structurally invalid (ragged, out of range)."""


class AxiomError(RackhomError):
    """A well-formed table fails the rack, quandle or group axioms."""

    def __init__(self, message: str, violations: Sequence[Violation]) -> None:
        super().__init__(message)
        self.violations = list(violations)


class PreconditionError(RackhomError, ValueError):
    """An operation was called outside its domain."""


class ShapeMismatchError(RackhomError, ValueError):
    """Boundary matrices of a chain complex do not compose."""


class BudgetExceededError(RackhomError):
    """A requested tuple basis is larger than the configured budget."""


class RackFileError(RackhomError, ValueError):
    """A rack file or configuration document could not be parsed."""
