"""Lexicographic bases of n-tuples over a finite rack.

The full basis of CR_n lists all |X|^n tuples; a tuple's position is the
integer whose base-|X| digits are its entries. A tuple is degenerate when two
neighbouring entries agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Literal

from rackhom.algebra.table import FiniteRack, require_quandle
from rackhom.types import Chain

BasisKind = Literal["full", "degenerate", "nondegenerate"]


def is_degenerate(x: Chain) -> bool:
    return any(a == b for a, b in zip(x, x[1:]))


def tuple_index(x: Chain, size: int) -> int:
    """Position of ``x`` in the full lexicographic basis of CR_len(x)."""
    index = 0
    for entry in x:
        index = index * size + entry
    return index


@dataclass(frozen=True)
class TupleBasis:
    """An ordered list of n-tuples with a reverse index."""

    degree: int
    size: int
    kind: BasisKind
    tuples: tuple[Chain, ...] = field(repr=False)
    position: dict[Chain, int] = field(repr=False, compare=False, hash=False)

    def __len__(self) -> int:
        return len(self.tuples)

    def index(self, x: Chain) -> int | None:
        """Position of ``x`` in this basis, or None when it is not a member."""
        return self.position.get(x)


def tuple_basis(size: int, n: int, kind: BasisKind = "full") -> TupleBasis:
    """All n-tuples over range(size) of the given kind, in lexicographic order."""
    if n < 0:
        raise ValueError(f"Degree must be non-negative, got {n}")
    tuples = tuple(product(range(size), repeat=n))
    if kind == "degenerate":
        tuples = tuple(x for x in tuples if is_degenerate(x))
    elif kind == "nondegenerate":
        tuples = tuple(x for x in tuples if not is_degenerate(x))
    return TupleBasis(n, size, kind, tuples, {x: i for i, x in enumerate(tuples)})


def nondegenerate_count(size: int, n: int) -> int:
    """|X|·(|X|-1)^(n-1) nondegenerate n-tuples, and 1 for n = 0."""
    if n == 0:
        return 1
    return size * (size - 1) ** (n - 1)


def degenerate_inclusion(quandle: FiniteRack, n: int) -> list[int]:
    """Positions of the degenerate tuples inside the full basis of CR_n."""
    size = require_quandle(quandle).size
    return [
        i for i, x in enumerate(product(range(size), repeat=n)) if is_degenerate(x)
    ]
