"""Standard families of racks and quandles, and the finite groups behind them."""

from __future__ import annotations

from itertools import permutations
from math import gcd
from typing import Sequence

from rackhom.algebra.table import (
    BinaryTable,
    FiniteQuandle,
    FiniteRack,
    validate_group,
)
from rackhom.errors import AxiomError, MalformedTableError, PreconditionError


def make_trivial(h: int) -> FiniteQuandle:
    """Trivial quandle on h elements: x▷y = y."""
    if h < 0:
        raise PreconditionError(f"Trivial quandle size must be non-negative, got {h}")
    return FiniteQuandle(BinaryTable.from_rows([list(range(h)) for _ in range(h)]))


def make_dihedral(n: int) -> FiniteQuandle:
    """Dihedral quandle on Z/n: x▷y = 2x − y."""
    if n < 1:
        raise PreconditionError(f"Dihedral quandle needs n >= 1, got {n}")
    return FiniteQuandle(
        BinaryTable.from_rows([[(2 * x - y) % n for y in range(n)] for x in range(n)])
    )


def make_alexander(n: int, t: int) -> FiniteQuandle:
    """Alexander quandle on Z/n: x▷y = t·y + (1 − t)·x for a unit t.

    With t ≡ −1 this is exactly :func:`make_dihedral`.
    """
    if n < 1:
        raise PreconditionError(f"Alexander quandle needs n >= 1, got {n}")
    if gcd(t, n) != 1:
        raise PreconditionError(f"t = {t} is not a unit modulo {n}")
    return FiniteQuandle(
        BinaryTable.from_rows(
            [[(t * y + (1 - t) * x) % n for y in range(n)] for x in range(n)]
        )
    )


def make_conjugation(group_table: BinaryTable, inverse: Sequence[int]) -> FiniteQuandle:
    """Conjugation quandle of a finite group: x▷y = x·y·x⁻¹."""
    violations = validate_group(group_table, inverse)
    if violations:
        raise AxiomError(
            f"Table is not a group ({len(violations)} violations)", violations
        )
    mul = group_table.op
    n = group_table.size
    return FiniteQuandle(
        BinaryTable.from_rows(
            [[mul[mul[x][y]][inverse[x]] for y in range(n)] for x in range(n)]
        )
    )


def make_permutation_rack(perm: Sequence[int]) -> FiniteRack:
    """Rack with constant action x▷y = σ(y); a quandle only when σ is the identity."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise MalformedTableError(f"{list(perm)} is not a permutation of range({n})")
    table = BinaryTable.from_rows([list(perm) for _ in range(n)])
    if all(perm[x] == x for x in range(n)):
        return FiniteQuandle(table)
    return FiniteRack(table)


def symmetric_group(n: int) -> tuple[BinaryTable, list[int]]:
    """Multiplication table of S_n on permutations in lexicographic order.

    The product is composition (στ)(i) = σ(τ(i)); element 0 is the identity.
    """
    elements = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(elements)}
    rows = [
        [index[tuple(s[t[i]] for i in range(n))] for t in elements] for s in elements
    ]
    inverse = []
    for s in elements:
        inv = [0] * n
        for i, si in enumerate(s):
            inv[si] = i
        inverse.append(index[tuple(inv)])
    return BinaryTable.from_rows(rows), inverse


# Quaternion units as (sign, unit) with unit in 1, i, j, k.
_UNIT_PRODUCTS: dict[tuple[str, str], tuple[int, str]] = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion_group() -> tuple[BinaryTable, list[int]]:
    """Multiplication table of Q8 ordered 1, −1, i, −i, j, −j, k, −k."""
    elements = [(s, u) for u in "1ijk" for s in (1, -1)]
    index = {e: i for i, e in enumerate(elements)}
    rows = []
    for s1, u1 in elements:
        row = []
        for s2, u2 in elements:
            sign, unit = _UNIT_PRODUCTS[(u1, u2)]
            row.append(index[(s1 * s2 * sign, unit)])
        rows.append(row)
    # 1 and −1 are self-inverse; the other units invert by negation.
    inverse = [index[(s if u == "1" else -s, u)] for s, u in elements]
    return BinaryTable.from_rows(rows), inverse


FAMILY_NAMES = (
    "trivial",
    "dihedral",
    "alexander",
    "conjugation-s3",
    "conjugation-q8",
    "permutation",
)


def build_family(name: str, params: Sequence[int] = ()) -> FiniteRack:
    """Factory: build a family member from its CLI/config name and parameters."""
    params = list(params)

    def _expect(count: int) -> None:
        if len(params) != count:
            raise ValueError(f"Family '{name}' takes {count} parameter(s), got {len(params)}")

    match name:
        case "trivial":
            _expect(1)
            return make_trivial(params[0])
        case "dihedral":
            _expect(1)
            return make_dihedral(params[0])
        case "alexander":
            _expect(2)
            return make_alexander(params[0], params[1])
        case "conjugation-s3":
            _expect(0)
            return make_conjugation(*symmetric_group(3))
        case "conjugation-q8":
            _expect(0)
            return make_conjugation(*quaternion_group())
        case "permutation":
            return make_permutation_rack(params)
        case _:
            raise ValueError(f"Unknown family: {name}")
