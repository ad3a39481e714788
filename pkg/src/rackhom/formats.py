"""Rack files and result documents.

A rack file is ``{"size": n, "op": [[...], ...]}`` with 0-based entries and
``op[x][y] = x▷y``. The optional ``"convention": "right"`` marks a table
written for right actions; it is transposed on load.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from rackhom.algebra.table import BinaryTable
from rackhom.errors import RackFileError
from rackhom.linalg.groups import AbelianGroupPresentation
from rackhom.types import JSONDict

Convention = Literal["left", "right"]

# Largest integer every JSON consumer reads exactly.
EXACT_INT_LIMIT = 2**53


class RackFile(BaseModel):
    """Schema of a rack file; unknown keys are rejected."""

    model_config = ConfigDict(extra="forbid", strict=True)

    size: int = Field(ge=0)
    op: list[list[int]]
    convention: Convention = "left"


def transpose_table(table: BinaryTable) -> BinaryTable:
    """Swap the operands: a right-action table r[y][x] = y◁x becomes op[x][y]."""
    n = table.size
    return BinaryTable.from_rows([[table.op[y][x] for y in range(n)] for x in range(n)], n)


def parse_rack_document(
    raw: Any, source: str = "<input>", convention: Convention | None = None
) -> BinaryTable:
    """Validate a decoded rack document and return its left-convention table."""
    try:
        document = RackFile.model_validate(raw)
    except ValidationError as e:
        problems = "; ".join(
            f"at {'.'.join(str(loc) for loc in err['loc']) or '<root>'}: {err['msg']}"
            for err in e.errors()
        )
        raise RackFileError(f"{source}: {problems}") from e
    table = BinaryTable.from_rows(document.op, document.size)
    if (convention or document.convention) == "right":
        table = transpose_table(table)
    return table


def load_rack_file(path: str | Path, convention: Convention | None = None) -> BinaryTable:
    """Read a rack file; ``convention`` overrides the file's own key.

    JSON syntax errors report line and column; schema errors report the
    offending key path. Structural problems (ragged rows, out-of-range
    entries) raise MalformedTableError.
    """
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"Rack file not found: {file_path}")
    text = file_path.read_text(encoding="utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise RackFileError(f"{file_path}:{e.lineno}:{e.colno}: {e.msg}") from e
    return parse_rack_document(raw, str(file_path), convention)


def dump_rack(table: BinaryTable) -> JSONDict:
    return {"size": table.size, "op": table.to_rows()}


def exact_int(value: int) -> int | str:
    """``value`` itself, or its decimal string when JSON doubles would round it."""
    return value if abs(value) <= EXACT_INT_LIMIT else str(value)


class GroupEntry(BaseModel):
    degree: int
    free_rank: int
    torsion: list[int | str]
    order: int | str | None = None

    @classmethod
    def from_presentation(cls, degree: int, group: AbelianGroupPresentation) -> GroupEntry:
        order = group.order
        return cls(
            degree=degree,
            free_rank=group.free_rank,
            torsion=[exact_int(t) for t in group.torsion],
            order=None if order is None else exact_int(order),
        )


class InputDescriptor(BaseModel):
    source: str
    size: int
    is_quandle: bool
    orbit_count: int


class ResultDocument(BaseModel):
    """A computed list of groups; ``timing`` is the only field that varies between runs."""

    input: InputDescriptor
    theory: str
    kind: Literal["homology", "cohomology", "quillen"]
    coefficient: str
    degrees: list[int]
    groups: list[GroupEntry]
    shifted_from: list[GroupEntry] | None = None
    timing: dict[str, Any] = Field(default_factory=dict)

    def body(self) -> JSONDict:
        """The reproducible part of the document."""
        return self.model_dump(exclude={"timing"}, exclude_none=True)

    def to_json(self) -> str:
        return json.dumps(
            {**self.body(), "timing": self.timing}, indent=2, ensure_ascii=False
        )
