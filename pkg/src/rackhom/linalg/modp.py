"""Linear algebra over prime fields."""

from __future__ import annotations

from typing import Sequence

from sympy import isprime

from rackhom.errors import PreconditionError
from rackhom.linalg.elimination import MarkowitzPivot, PivotPolicy, Workspace
from rackhom.linalg.sparse import SparseIntMatrix


def _require_prime(p: int) -> None:
    if not isprime(p):
        raise PreconditionError(f"{p} is not prime")


def fp_rank(matrix: SparseIntMatrix, p: int, policy: PivotPolicy | None = None) -> int:
    """Rank over F_p by pivoted sparse elimination."""
    _require_prime(p)
    policy = policy if policy is not None else MarkowitzPivot()
    work = Workspace(matrix, modulus=p)
    rank = 0
    while work.col_rows:
        r, c = policy.choose(work)
        inverse = pow(work.rows[r][c], -1, p)
        for i in [i for i in work.col_rows[c] if i != r]:
            work.add_row_multiple(i, r, -work.rows[i][c] * inverse)
        # Over a field the pivot row needs no column operations beyond removal.
        work.remove_row(r)
        rank += 1
    return rank


def fp_row_reduce(
    rows: Sequence[Sequence[int]], ncols: int, p: int
) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p of a dense system; returns (rows, pivot columns)."""
    _require_prime(p)
    reduced = [[v % p for v in row] for row in rows]
    pivot_cols: list[int] = []
    top = 0
    for c in range(ncols):
        pivot = next((i for i in range(top, len(reduced)) if reduced[i][c]), None)
        if pivot is None:
            continue
        reduced[top], reduced[pivot] = reduced[pivot], reduced[top]
        inverse = pow(reduced[top][c], -1, p)
        reduced[top] = [v * inverse % p for v in reduced[top]]
        for i in range(len(reduced)):
            if i != top and reduced[i][c]:
                factor = reduced[i][c]
                reduced[i] = [(a - factor * b) % p for a, b in zip(reduced[i], reduced[top])]
        pivot_cols.append(c)
        top += 1
        if top == len(reduced):
            break
    return reduced[:top], pivot_cols


def fp_nullspace(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of {v : A v = 0} over F_p, one vector per free column."""
    reduced, pivot_cols = fp_row_reduce(rows, ncols, p)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [0] * ncols
        vector[free] = 1
        for row, c in zip(reduced, pivot_cols):
            vector[c] = -row[free] % p
        basis.append(vector)
    return basis
