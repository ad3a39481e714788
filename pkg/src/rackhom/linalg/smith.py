"""Smith normal form of integer matrices by pivoted elimination.

The sparse reduction isolates one pivot at a time: row operations clear the
pivot column, column operations clear the pivot row, and whenever a
remainder is smaller than the pivot it becomes the new pivot. Every isolated
pivot is a diagonal entry of an equivalent diagonal matrix; the diagonal is
normalized to the divisibility chain at the end.

:func:`smith_decomposition` is the dense variant that also records the
transforms, for the small systems whose solutions are needed explicitly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from rackhom.linalg.elimination import MarkowitzPivot, PivotPolicy, Workspace
from rackhom.linalg.groups import invariant_factors
from rackhom.linalg.sparse import SparseIntMatrix
from rackhom.observability.logger import get_logger

logger = get_logger(__name__, json_format=False)

Dense = list[list[int]]


@dataclass(frozen=True)
class SmithForm:
    """Elementary divisors d₁ | d₂ | ... | d_rank (all positive, leading ones kept)."""

    divisors: tuple[int, ...]
    rank: int

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.divisors if d > 1)


@dataclass
class _Stats:
    pivots: int = 0
    moves: int = 0
    diagonal: list[int] = field(default_factory=list)


def _isolate(work: Workspace, r: int, c: int, stats: _Stats) -> int:
    """Reduce row r and column c to the single pivot entry and return its absolute value."""
    while True:
        p = work.rows[r][c]
        for i in [i for i in work.col_rows[c] if i != r]:
            q = work.rows[i][c] // p
            if q:
                work.add_row_multiple(i, r, -q)
        others = [i for i in work.col_rows[c] if i != r]
        if others:
            # A nonzero remainder is smaller than |p|; it becomes the pivot.
            r = min(others, key=lambda i: abs(work.rows[i][c]))
            stats.moves += 1
            continue
        # Column c holds only the pivot, so column operations touch row r alone.
        if abs(p) == 1:
            work.remove_row(r)
            return 1
        row = work.rows[r]
        for j in [j for j in row if j != c]:
            q = row[j] // p
            if q:
                work.set(r, j, row[j] - q * p)
        others = [j for j in row if j != c]
        if others:
            c = min(others, key=lambda j: abs(row[j]))
            stats.moves += 1
            continue
        work.remove_row(r)
        return abs(p)


def smith_normal_form(
    matrix: SparseIntMatrix, policy: PivotPolicy | None = None
) -> SmithForm:
    """Elementary divisors of ``matrix``; exact for arbitrarily large entries."""
    started = time.perf_counter()
    policy = policy if policy is not None else MarkowitzPivot()
    work = Workspace(matrix)
    stats = _Stats()
    while work.col_rows:
        r, c = policy.choose(work)
        stats.diagonal.append(_isolate(work, r, c, stats))
        stats.pivots += 1
    divisors = invariant_factors(stats.diagonal)
    ones = len(stats.diagonal) - len(divisors)
    logger.debug(
        "Smith form of %dx%d (nnz %d): rank %d, %d pivot moves, %.3fs",
        matrix.rows,
        matrix.cols,
        matrix.nnz(),
        stats.pivots,
        stats.moves,
        time.perf_counter() - started,
    )
    return SmithForm(divisors=(1,) * ones + divisors, rank=stats.pivots)


@dataclass(frozen=True)
class SmithDecomposition:
    """A = P · D · V⁻¹ with D diagonal, d₁ | d₂ | ... | d_rank.

    ``left_inverse`` is P (rows × rows), ``right`` is V and ``right_inverse``
    is V⁻¹ (cols × cols); transforms that were not requested are empty.
    """

    diagonal: tuple[int, ...]
    left_inverse: Dense = field(repr=False)
    right: Dense = field(repr=False)
    right_inverse: Dense = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def _identity(n: int) -> Dense:
    return [[int(i == j) for j in range(n)] for i in range(n)]


class _DenseReduction:
    """Row and column operations on a dense matrix, mirrored on the transforms."""

    def __init__(
        self, dense: Sequence[Sequence[int]], cols: int, left: bool, right: bool
    ) -> None:
        self.a = [list(row) for row in dense]
        self.rows, self.cols = len(self.a), cols
        self.p = _identity(self.rows) if left else []
        self.v = _identity(cols) if right else []
        self.v_inverse = _identity(cols) if right else []

    def add_row(self, target: int, source: int, q: int) -> None:
        """row[target] += q * row[source]; P gains -q * column target in column source."""
        a = self.a
        a[target] = [x + q * y for x, y in zip(a[target], a[source])]
        for row in self.p:
            row[source] -= q * row[target]

    def add_column(self, target: int, source: int, q: int) -> None:
        """column[target] += q * column[source]."""
        for row in self.a:
            row[target] += q * row[source]
        for row in self.v:
            row[target] += q * row[source]
        if self.v_inverse:
            inv = self.v_inverse
            inv[source] = [x - q * y for x, y in zip(inv[source], inv[target])]

    def swap_rows(self, i: int, j: int) -> None:
        self.a[i], self.a[j] = self.a[j], self.a[i]
        for row in self.p:
            row[i], row[j] = row[j], row[i]

    def swap_columns(self, i: int, j: int) -> None:
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        for row in self.v:
            row[i], row[j] = row[j], row[i]
        if self.v_inverse:
            inv = self.v_inverse
            inv[i], inv[j] = inv[j], inv[i]

    def negate_row(self, i: int) -> None:
        self.a[i] = [-x for x in self.a[i]]
        for row in self.p:
            row[i] = -row[i]

    def smallest(self, t: int) -> tuple[int, int] | None:
        entries = [
            (abs(self.a[i][j]), i, j)
            for i in range(t, self.rows)
            for j in range(t, self.cols)
            if self.a[i][j]
        ]
        if not entries:
            return None
        _, i, j = min(entries)
        return i, j

    def settle(self, t: int) -> None:
        """Make a[t][t] the only nonzero entry of row t and column t, dividing the rest."""
        a = self.a
        while True:
            pivot = a[t][t]
            for i in range(t + 1, self.rows):
                if a[i][t]:
                    self.add_row(i, t, -(a[i][t] // pivot))
            below = [i for i in range(t + 1, self.rows) if a[i][t]]
            if below:
                self.swap_rows(t, min(below, key=lambda i: abs(a[i][t])))
                continue
            for j in range(t + 1, self.cols):
                if a[t][j]:
                    self.add_column(j, t, -(a[t][j] // pivot))
            right = [j for j in range(t + 1, self.cols) if a[t][j]]
            if right:
                self.swap_columns(t, min(right, key=lambda j: abs(a[t][j])))
                continue
            stray = next(
                (
                    i
                    for i in range(t + 1, self.rows)
                    for j in range(t + 1, self.cols)
                    if a[i][j] % pivot
                ),
                None,
            )
            if stray is None:
                break
            self.add_row(t, stray, 1)
        if a[t][t] < 0:
            self.negate_row(t)


def smith_decomposition(
    dense: Sequence[Sequence[int]],
    cols: int,
    *,
    left: bool = False,
    right: bool = False,
) -> SmithDecomposition:
    """Smith form of a dense matrix with the requested transforms (``left`` P, ``right`` V)."""
    work = _DenseReduction(dense, cols, left, right)
    diagonal: list[int] = []
    t = 0
    while t < min(work.rows, cols):
        position = work.smallest(t)
        if position is None:
            break
        i, j = position
        work.swap_rows(t, i)
        work.swap_columns(t, j)
        work.settle(t)
        diagonal.append(work.a[t][t])
        t += 1
    return SmithDecomposition(tuple(diagonal), work.p, work.v, work.v_inverse)
