"""Orbits and morphisms of finite racks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from rackhom.algebra.table import FiniteRack
from rackhom.errors import MalformedTableError


@dataclass(frozen=True)
class OrbitPartition:
    """Orbit id per element, numbered 0, 1, ... in order of least member."""

    orbit_of: tuple[int, ...]
    orbit_count: int

    def members(self, orbit: int) -> list[int]:
        return [x for x, o in enumerate(self.orbit_of) if o == orbit]


def orbits(rack: FiniteRack) -> OrbitPartition:
    """Partition under the equivalence generated by y ~ x▷y."""
    parent = list(range(rack.size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row in rack.op:
        for y, z in enumerate(row):
            ry, rz = find(y), find(z)
            if ry != rz:
                # Keep the smaller index as root so numbering is by least element.
                parent[max(ry, rz)] = min(ry, rz)

    ids: dict[int, int] = {}
    orbit_of = []
    for x in range(rack.size):
        root = find(x)
        if root not in ids:
            ids[root] = len(ids)
        orbit_of.append(ids[root])
    return OrbitPartition(orbit_of=tuple(orbit_of), orbit_count=len(ids))


def is_homomorphism(f: Sequence[int], src: FiniteRack, dst: FiniteRack) -> bool:
    """True iff f(x▷y) = f(x)▷f(y) for all x, y in ``src``."""
    if len(f) != src.size:
        raise MalformedTableError(f"Map has {len(f)} entries, expected {src.size}")
    for x, image in enumerate(f):
        if not 0 <= image < dst.size:
            raise MalformedTableError(
                f"f({x}) = {image} is out of range [0, {dst.size})"
            )
    src_op, dst_op = src.op, dst.op
    return all(
        f[src_op[x][y]] == dst_op[f[x]][f[y]]
        for x in range(src.size)
        for y in range(src.size)
    )


def count_homomorphisms(src: FiniteRack, dst: FiniteRack) -> int:
    """Brute-force count of rack morphisms src → dst (dst.size ** src.size candidates)."""
    return sum(
        1
        for f in product(range(dst.size), repeat=src.size)
        if is_homomorphism(f, src, dst)
    )
