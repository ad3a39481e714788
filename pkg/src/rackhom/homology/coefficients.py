"""Trivial coefficient groups Z and Z/m."""

from __future__ import annotations

import re
from dataclasses import dataclass

from rackhom.errors import PreconditionError

_MODULAR = re.compile(r"^Z/(\d+)$")


@dataclass(frozen=True)
class CoefficientSpec:
    """Z when ``modulus`` is None, otherwise Z/modulus with modulus >= 2."""

    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.modulus is not None and self.modulus < 2:
            raise PreconditionError(f"Modulus must be at least 2, got {self.modulus}")

    @classmethod
    def parse(cls, text: str) -> CoefficientSpec:
        """Parse ``Z`` or ``Z/m``."""
        text = text.strip()
        if text == "Z":
            return cls()
        match = _MODULAR.match(text)
        if match is None:
            raise ValueError(f"Coefficients must be 'Z' or 'Z/m', got {text!r}")
        return cls(int(match.group(1)))

    @property
    def is_integral(self) -> bool:
        return self.modulus is None

    def __str__(self) -> str:
        return "Z" if self.modulus is None else f"Z/{self.modulus}"


INTEGERS = CoefficientSpec()
