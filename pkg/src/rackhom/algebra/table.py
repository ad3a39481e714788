"""Operation tables, rack and quandle validation."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from rackhom.errors import AxiomError, MalformedTableError, PreconditionError
from rackhom.types import Element, OpTable

# Cap on the diagnostics collected per axiom; a broken table can violate size**3 instances.
DEFAULT_VIOLATION_LIMIT = 20


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance."""

    axiom: str
    witness: tuple[int, ...]
    message: str

    def to_dict(self) -> dict[str, object]:
        return {"axiom": self.axiom, "witness": list(self.witness), "message": self.message}


@dataclass(frozen=True)
class BinaryTable:
    """A binary operation on {0, ..., size-1}; ``op[x][y]`` is x▷y."""

    size: int
    op: OpTable

    def __post_init__(self) -> None:
        if self.size < 0:
            raise MalformedTableError(f"Table size must be non-negative, got {self.size}")
        if len(self.op) != self.size:
            raise MalformedTableError(
                f"Table has {len(self.op)} rows, expected {self.size}"
            )
        for x, row in enumerate(self.op):
            if len(row) != self.size:
                raise MalformedTableError(
                    f"Row {x} has {len(row)} entries, expected {self.size}"
                )
            for y, value in enumerate(row):
                if not isinstance(value, int) or isinstance(value, bool):
                    raise MalformedTableError(f"Entry op[{x}][{y}] is not an integer: {value!r}")
                if not 0 <= value < self.size:
                    raise MalformedTableError(
                        f"Entry op[{x}][{y}] = {value} is out of range [0, {self.size})"
                    )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], size: int | None = None) -> BinaryTable:
        """Build a table from nested sequences; ``size`` defaults to the row count."""
        return cls(
            size=len(rows) if size is None else size,
            op=tuple(tuple(row) for row in rows),
        )

    def to_rows(self) -> list[list[int]]:
        return [list(row) for row in self.op]


@dataclass(frozen=True)
class FiniteRack:
    """A validated rack: every left translation is a bijective endomorphism.

    Construct through :func:`validate_rack` or :meth:`from_table`; the
    constructor itself does not re-check the axioms.
    """

    table: BinaryTable

    @classmethod
    def from_table(cls, table: BinaryTable) -> FiniteRack:
        result = validate_rack(table)
        if isinstance(result, list):
            raise AxiomError(f"Table is not a rack ({len(result)} violations)", result)
        return result

    @property
    def size(self) -> int:
        return self.table.size

    @property
    def op(self) -> OpTable:
        return self.table.op

    def act(self, x: Element, y: Element) -> Element:
        return self.table.op[x][y]

    @cached_property
    def inverse_rows(self) -> OpTable:
        """``inverse_rows[x][z]`` is the unique y with x▷y = z."""
        rows = []
        for row in self.table.op:
            inverse = [0] * self.size
            for y, z in enumerate(row):
                inverse[z] = y
            rows.append(tuple(inverse))
        return tuple(rows)

    def is_quandle(self) -> bool:
        return all(self.table.op[x][x] == x for x in range(self.size))


@dataclass(frozen=True)
class FiniteQuandle(FiniteRack):
    """A validated rack whose operation is idempotent."""

    @classmethod
    def from_table(cls, table: BinaryTable) -> FiniteQuandle:
        rack = FiniteRack.from_table(table)
        result = validate_quandle(rack)
        if isinstance(result, list):
            raise AxiomError(f"Rack is not a quandle ({len(result)} violations)", result)
        return result

    @property
    def rack(self) -> FiniteRack:
        return FiniteRack(self.table)


def _row_violations(table: BinaryTable, limit: int) -> list[Violation]:
    violations: list[Violation] = []
    for x, row in enumerate(table.op):
        if len(set(row)) != table.size:
            missing = sorted(set(range(table.size)) - set(row))
            violations.append(
                Violation(
                    axiom="left-bijectivity",
                    witness=(x,),
                    message=f"row {x} is not a permutation (missing {missing})",
                )
            )
            if len(violations) >= limit:
                break
    return violations


def _distributivity_violations(table: BinaryTable, limit: int) -> list[Violation]:
    op = table.op
    violations: list[Violation] = []
    for x in range(table.size):
        row_x = op[x]
        for y in range(table.size):
            row_xy = op[row_x[y]]
            row_y = op[y]
            for z in range(table.size):
                if row_x[row_y[z]] != row_xy[row_x[z]]:
                    violations.append(
                        Violation(
                            axiom="self-distributivity",
                            witness=(x, y, z),
                            message=(
                                f"x▷(y▷z) = {row_x[row_y[z]]} but "
                                f"(x▷y)▷(x▷z) = {row_xy[row_x[z]]} "
                                f"for (x, y, z) = ({x}, {y}, {z})"
                            ),
                        )
                    )
                    if len(violations) >= limit:
                        return violations
    return violations


def validate_rack(
    table: BinaryTable, limit: int = DEFAULT_VIOLATION_LIMIT
) -> FiniteRack | list[Violation]:
    """Check left-bijectivity and left self-distributivity.

    Returns the validated rack, or the list of violated rows/triples (at most
    ``limit`` per axiom).
    """
    violations = _row_violations(table, limit) + _distributivity_violations(table, limit)
    if violations:
        return violations
    return FiniteRack(table)


def validate_quandle(rack: FiniteRack) -> FiniteQuandle | list[Violation]:
    """Check idempotence x▷x = x on an already validated rack."""
    violations = [
        Violation(
            axiom="idempotence",
            witness=(x,),
            message=f"{x}▷{x} = {rack.op[x][x]}, expected {x}",
        )
        for x in range(rack.size)
        if rack.op[x][x] != x
    ]
    if violations:
        return violations
    return FiniteQuandle(rack.table)


def validate_group(table: BinaryTable, inverse: Sequence[int]) -> list[Violation]:
    """Group axioms for a multiplication table with a claimed inverse map.

    The identity is taken to be the unique two-sided unit of the table.
    """
    n = table.size
    if len(inverse) != n:
        raise MalformedTableError(f"Inverse map has {len(inverse)} entries, expected {n}")
    for x, value in enumerate(inverse):
        if not 0 <= value < n:
            raise MalformedTableError(f"inverse[{x}] = {value} is out of range [0, {n})")

    mul = table.op
    units = [e for e in range(n) if all(mul[e][x] == x and mul[x][e] == x for x in range(n))]
    if not units:
        return [Violation(axiom="identity", witness=(), message="table has no two-sided unit")]

    violations: list[Violation] = []
    if units:
        e = units[0]
        for x in range(n):
            if mul[x][inverse[x]] != e or mul[inverse[x]][x] != e:
                violations.append(
                    Violation(
                        axiom="inverse",
                        witness=(x,),
                        message=f"inverse[{x}] = {inverse[x]} is not a two-sided inverse",
                    )
                )
    for x in range(n):
        for y in range(n):
            xy = mul[x][y]
            for z in range(n):
                if mul[xy][z] != mul[x][mul[y][z]]:
                    violations.append(
                        Violation(
                            axiom="associativity",
                            witness=(x, y, z),
                            message=f"(x·y)·z ≠ x·(y·z) for (x, y, z) = ({x}, {y}, {z})",
                        )
                    )
                    if len(violations) >= DEFAULT_VIOLATION_LIMIT:
                        return violations
    return violations


def relabel(rack: FiniteRack, perm: Sequence[int]) -> FiniteRack:
    """Isomorphic copy of ``rack`` in which element x is renamed ``perm[x]``."""
    n = rack.size
    if sorted(perm) != list(range(n)):
        raise MalformedTableError(f"Relabeling is not a permutation of range({n})")
    rows = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            rows[perm[x]][perm[y]] = perm[rack.op[x][y]]
    table = BinaryTable.from_rows(rows)
    if isinstance(rack, FiniteQuandle):
        return FiniteQuandle(table)
    return FiniteRack(table)


def require_quandle(rack: FiniteRack) -> FiniteQuandle:
    """The quandle view of ``rack``, or PreconditionError naming an idempotence witness."""
    if isinstance(rack, FiniteQuandle):
        return rack
    result = validate_quandle(rack)
    if isinstance(result, list):
        raise PreconditionError(
            f"Quandle theory requires a quandle: {result[0].message}"
        )
    return result
