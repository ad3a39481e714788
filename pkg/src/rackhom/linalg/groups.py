"""Finitely generated abelian groups as free rank plus invariant factors.

Direct sums, tensor and Tor with Z/m work one prime at a time on the
elementary divisors and are normalized back to the divisibility chain
d₁ | d₂ | ... with every dᵢ > 1.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import zip_longest
from math import gcd, prod
from typing import Iterable

from sympy import factorint

from rackhom.errors import PreconditionError


def elementary_divisors(orders: Iterable[int]) -> dict[int, list[int]]:
    """Map prime → exponents (descending) for a multiset of cyclic orders.

    Orders 0 and 1 are ignored; negative orders count by absolute value.
    """
    exponents: dict[int, list[int]] = defaultdict(list)
    for d in orders:
        d = abs(d)
        if d > 1:
            for p, e in factorint(d).items():
                exponents[int(p)].append(int(e))
    return {p: sorted(e_list, reverse=True) for p, e_list in sorted(exponents.items())}


def invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Normalize cyclic orders into the ascending divisibility chain (entries > 1).

    >>> invariant_factors([2, 3, 4])
    (2, 12)
    """
    by_prime = elementary_divisors(orders)
    columns = zip_longest(
        *([p**e for e in e_list] for p, e_list in by_prime.items()), fillvalue=1
    )
    # Largest factor first, so reverse for ascending order.
    return tuple(reversed([prod(column) for column in columns]))


@dataclass(frozen=True)
class AbelianGroupPresentation:
    """Z^free_rank ⊕ Z/t₁ ⊕ ... ⊕ Z/t_k with t₁ | t₂ | ... and tᵢ > 1."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError(f"Negative free rank {self.free_rank}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"Torsion {self.torsion} is not a divisibility chain")
        if any(t <= 1 for t in self.torsion):
            raise ValueError(f"Torsion entries must exceed 1, got {self.torsion}")

    @classmethod
    def from_orders(cls, free_rank: int, orders: Iterable[int]) -> AbelianGroupPresentation:
        """Build from arbitrary cyclic orders; order 0 adds a free summand."""
        orders = list(orders)
        extra_free = sum(1 for d in orders if d == 0)
        return cls(free_rank + extra_free, invariant_factors(d for d in orders if d != 0))

    @classmethod
    def zero(cls) -> AbelianGroupPresentation:
        return cls()

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Group order, or None when the group is infinite."""
        if self.free_rank:
            return None
        return prod(self.torsion)

    @property
    def minimal_generators(self) -> int:
        return self.free_rank + len(self.torsion)

    def direct_sum(self, *others: AbelianGroupPresentation) -> AbelianGroupPresentation:
        groups = (self, *others)
        return AbelianGroupPresentation(
            sum(g.free_rank for g in groups),
            invariant_factors(t for g in groups for t in g.torsion),
        )

    def tensor_mod(self, m: int) -> AbelianGroupPresentation:
        """G ⊗ Z/m."""
        _check_modulus(m)
        orders = [m] * self.free_rank + [gcd(t, m) for t in self.torsion]
        return AbelianGroupPresentation(0, invariant_factors(orders))

    def tor_mod(self, m: int) -> AbelianGroupPresentation:
        """Tor(G, Z/m); only the torsion of G contributes."""
        _check_modulus(m)
        return AbelianGroupPresentation(0, invariant_factors(gcd(t, m) for t in self.torsion))

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict[str, object]:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def _check_modulus(m: int) -> None:
    if m < 2:
        raise PreconditionError(f"Modulus must be at least 2, got {m}")
