"""Sparse elimination workspace and pivot policies shared by Smith forms and F_p ranks.

Fill-in is confined to the rows of the pivot column and the columns of the
pivot row, so a pivot costs about (row count - 1)(column count - 1) new
entries. Policies trade search time against that cost.
"""

from __future__ import annotations

import heapq
from typing import Callable, Protocol, Sized

from rackhom.linalg.sparse import SparseIntMatrix

# Sparsest columns and rows examined per Markowitz choice.
DEFAULT_SEARCH = 4


class Workspace:
    """Mutable row-major copy of a matrix with a column → rows index.

    With a ``modulus`` every stored value is reduced into [0, modulus) and
    entries that vanish modulo it are dropped.
    """

    def __init__(self, matrix: SparseIntMatrix, modulus: int | None = None) -> None:
        self.modulus = modulus
        self.rows: dict[int, dict[int, int]] = {}
        self.col_rows: dict[int, set[int]] = {}
        for c, column in enumerate(matrix.columns):
            for r, v in column.items():
                if modulus is not None:
                    v %= modulus
                    if not v:
                        continue
                self.rows.setdefault(r, {})[c] = v
                self.col_rows.setdefault(c, set()).add(r)
        self.changed_columns: set[int] = set(self.col_rows)
        self.changed_rows: set[int] = set(self.rows)

    def is_unit(self, value: int) -> bool:
        return self.modulus is not None or abs(value) == 1

    def set(self, r: int, c: int, value: int) -> None:
        if self.modulus is not None:
            value %= self.modulus
        row = self.rows[r]
        if value:
            row[c] = value
            self.col_rows.setdefault(c, set()).add(r)
        else:
            row.pop(c, None)
            rows = self.col_rows.get(c)
            if rows is not None:
                rows.discard(r)
                if not rows:
                    del self.col_rows[c]
        self.changed_columns.add(c)
        self.changed_rows.add(r)

    def add_row_multiple(self, target: int, source: int, factor: int) -> None:
        """row[target] += factor * row[source]."""
        target_row = self.rows[target]
        for c, v in self.rows[source].items():
            self.set(target, c, target_row.get(c, 0) + factor * v)

    def remove_row(self, r: int) -> None:
        """Delete row r; used once its pivot column holds nothing else."""
        for c in self.rows.pop(r):
            rows = self.col_rows[c]
            rows.discard(r)
            if not rows:
                del self.col_rows[c]
            self.changed_columns.add(c)

    def markowitz_cost(self, r: int, c: int) -> tuple[bool, int, int, int, int]:
        value = self.rows[r][c]
        fill = (len(self.rows[r]) - 1) * (len(self.col_rows[c]) - 1)
        return (not self.is_unit(value), fill, abs(value), r, c)


class PivotPolicy(Protocol):
    """Chooses the next pivot position in a non-empty workspace."""

    def choose(self, work: Workspace) -> tuple[int, int]:
        ...


def _sparsest(
    heap: list[tuple[int, int]], lines: Callable[[int], Sized | None], count: int
) -> list[int]:
    """Pop up to ``count`` live entries with current sizes and push them back."""
    found: list[tuple[int, int]] = []
    while heap and len(found) < count:
        size, index = heapq.heappop(heap)
        line = lines(index)
        if line and len(line) == size:
            found.append((size, index))
    for entry in found:
        heapq.heappush(heap, entry)
    return [index for _, index in found]


class MarkowitzPivot:
    """Least fill (r - 1)(c - 1) over the few sparsest columns and rows, units first.

    Line sizes are tracked in lazy heaps refreshed from the rows and columns
    the workspace reports as changed. A fresh instance (or a new workspace)
    starts with empty heaps.
    """

    def __init__(self, search: int = DEFAULT_SEARCH) -> None:
        self.search = search
        self._columns: list[tuple[int, int]] = []
        self._rows: list[tuple[int, int]] = []
        self._work: Workspace | None = None

    def choose(self, work: Workspace) -> tuple[int, int]:
        if work is not self._work:
            self._columns, self._rows, self._work = [], [], work
        for c in work.changed_columns:
            rows = work.col_rows.get(c)
            if rows:
                heapq.heappush(self._columns, (len(rows), c))
        for r in work.changed_rows:
            row = work.rows.get(r)
            if row:
                heapq.heappush(self._rows, (len(row), r))
        work.changed_columns.clear()
        work.changed_rows.clear()

        candidates = [
            (r, c)
            for c in _sparsest(self._columns, work.col_rows.get, self.search)
            for r in work.col_rows[c]
        ]
        candidates.extend(
            (r, c)
            for r in _sparsest(self._rows, work.rows.get, self.search)
            for c in work.rows[r]
        )
        return min(candidates, key=lambda rc: work.markowitz_cost(*rc))


class SmallestEntryPivot:
    """Smallest absolute value anywhere, ties by position (full scan)."""

    def choose(self, work: Workspace) -> tuple[int, int]:
        work.changed_columns.clear()
        work.changed_rows.clear()
        return min(
            ((r, c) for r, row in work.rows.items() for c in row),
            key=lambda rc: (abs(work.rows[rc[0]][rc[1]]), rc),
        )
