"""Sparse matrices over the integers with arbitrary-precision entries."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence


@dataclass(frozen=True)
class SparseIntMatrix:
    """A rows × cols integer matrix stored column by column, zeros omitted.

    ``columns[c]`` maps row index to a nonzero Python int. Instances are
    treated as immutable.
    """

    rows: int
    cols: int
    columns: tuple[Mapping[int, int], ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"Negative matrix shape {self.rows}x{self.cols}")
        if len(self.columns) != self.cols:
            raise ValueError(f"Expected {self.cols} columns, got {len(self.columns)}")
        for c, column in enumerate(self.columns):
            for r, value in column.items():
                if not 0 <= r < self.rows:
                    raise ValueError(f"Row index {r} out of range in column {c}")
                if value == 0:
                    raise ValueError(f"Explicit zero stored at ({r}, {c})")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> SparseIntMatrix:
        return cls(rows, cols, tuple({} for _ in range(cols)))

    @classmethod
    def identity(cls, n: int) -> SparseIntMatrix:
        return cls(n, n, tuple({i: 1} for i in range(n)))

    @classmethod
    def from_columns(
        cls, rows: int, columns: Iterable[Mapping[int, int]]
    ) -> SparseIntMatrix:
        """Build from per-column row→value maps, dropping zeros."""
        cleaned = tuple({r: v for r, v in column.items() if v != 0} for column in columns)
        return cls(rows, len(cleaned), cleaned)

    @classmethod
    def from_triples(
        cls, rows: int, cols: int, triples: Iterable[tuple[int, int, int]]
    ) -> SparseIntMatrix:
        """Build from (row, col, value) triples; repeated positions are summed."""
        columns: list[dict[int, int]] = [defaultdict(int) for _ in range(cols)]
        for r, c, v in triples:
            if not 0 <= c < cols:
                raise ValueError(f"Column index {c} out of range")
            columns[c][r] += v
        return cls.from_columns(rows, columns)

    @classmethod
    def from_dense(
        cls, dense: Sequence[Sequence[int]], cols: int | None = None
    ) -> SparseIntMatrix:
        rows = len(dense)
        width = cols if cols is not None else (len(dense[0]) if dense else 0)
        return cls.from_columns(
            rows, ({r: dense[r][c] for r in range(rows)} for c in range(width))
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def nnz(self) -> int:
        return sum(len(column) for column in self.columns)

    def is_zero(self) -> bool:
        return all(not column for column in self.columns)

    def get(self, r: int, c: int) -> int:
        return self.columns[c].get(r, 0)

    def entries(self) -> Iterator[tuple[int, int, int]]:
        """Coordinate triples (row, col, value) in column-major order."""
        for c, column in enumerate(self.columns):
            for r in sorted(column):
                yield r, c, column[r]

    def transpose(self) -> SparseIntMatrix:
        columns: list[dict[int, int]] = [{} for _ in range(self.rows)]
        for c, column in enumerate(self.columns):
            for r, v in column.items():
                columns[r][c] = v
        return SparseIntMatrix(self.cols, self.rows, tuple(columns))

    def __matmul__(self, other: SparseIntMatrix) -> SparseIntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        result = []
        for other_column in other.columns:
            acc: dict[int, int] = defaultdict(int)
            for k, b in other_column.items():
                for r, a in self.columns[k].items():
                    acc[r] += a * b
            result.append(acc)
        return SparseIntMatrix.from_columns(self.rows, result)

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> SparseIntMatrix:
        """Restrict to the given rows and columns (renumbered in the order given).

        Entries in rows outside ``row_indices`` are discarded.
        """
        position = {r: i for i, r in enumerate(row_indices)}
        return SparseIntMatrix(
            len(row_indices),
            len(col_indices),
            tuple(
                {position[r]: v for r, v in self.columns[c].items() if r in position}
                for c in col_indices
            ),
        )

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> SparseIntMatrix:
        """Move row r to ``row_perm[r]`` and column c to ``col_perm[c]``."""
        columns: list[dict[int, int]] = [{} for _ in range(self.cols)]
        for c, column in enumerate(self.columns):
            columns[col_perm[c]] = {row_perm[r]: v for r, v in column.items()}
        return SparseIntMatrix(self.rows, self.cols, tuple(columns))

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for c, column in enumerate(self.columns):
            for r, v in column.items():
                dense[r][c] = v
        return dense

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            dict(a) == dict(b) for a, b in zip(self.columns, other.columns)
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, tuple(self.entries())))
