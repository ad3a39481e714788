"""Boundary matrices of the rack complex and its degenerate and quandle parts.

The boundary of an n-tuple is Σ_{j=1..n} (-1)^j (δ_j⁰ - δ_j¹) where δ_j⁰
deletes x_j and δ_j¹ deletes x_j after letting it act on every later entry:

    δ_j¹(x₁, ..., xₙ) = (x₁, ..., x_{j-1}, x_j▷x_{j+1}, ..., x_j▷xₙ)

In degree 2 this gives ∂(x, y) = x▷y - y. The j = n faces coincide and
cancel; they are still generated.
"""

from __future__ import annotations

from collections import defaultdict

from rackhom.algebra.table import FiniteRack, require_quandle
from rackhom.homology.bases import BasisKind, TupleBasis, tuple_basis
from rackhom.linalg.sparse import SparseIntMatrix
from rackhom.observability.logger import get_logger
from rackhom.types import Chain, OpTable

logger = get_logger(__name__, json_format=False)


def _boundary_column(op: OpTable, x: Chain) -> dict[Chain, int]:
    """∂x as a map from (n-1)-tuples to coefficients, zeros possibly included."""
    column: dict[Chain, int] = defaultdict(int)
    for j in range(1, len(x) + 1):
        sign = -1 if j % 2 else 1
        actor = op[x[j - 1]]
        head = x[: j - 1]
        column[head + x[j:]] += sign
        column[head + tuple(actor[y] for y in x[j:])] -= sign
    return column


def _restricted_boundary(
    rack: FiniteRack, n: int, col_kind: BasisKind, row_kind: BasisKind
) -> SparseIntMatrix:
    """∂_n on the ``col_kind`` tuples, keeping only rows of ``row_kind``."""
    if n < 1:
        raise ValueError(f"Boundary degree must be at least 1, got {n}")
    cols: TupleBasis = tuple_basis(rack.size, n, col_kind)
    rows: TupleBasis = tuple_basis(rack.size, n - 1, row_kind)
    op = rack.op
    columns = []
    for x in cols.tuples:
        column: dict[int, int] = {}
        for face, value in _boundary_column(op, x).items():
            r = rows.index(face)
            if value and r is not None:
                column[r] = value
        columns.append(column)
    matrix = SparseIntMatrix.from_columns(len(rows), columns)
    logger.debug(
        "∂_%d (%s): %dx%d, nnz %d", n, col_kind, matrix.rows, matrix.cols, matrix.nnz()
    )
    return matrix


def rack_boundary_matrix(rack: FiniteRack, n: int) -> SparseIntMatrix:
    """∂_n: CR_n → CR_{n-1} in the lexicographic tuple bases."""
    return _restricted_boundary(rack, n, "full", "full")


def quandle_boundary_matrix(quandle: FiniteRack, n: int) -> SparseIntMatrix:
    """Induced ∂_n: CQ_n → CQ_{n-1} on nondegenerate tuples; degenerate targets are dropped."""
    return _restricted_boundary(require_quandle(quandle), n, "nondegenerate", "nondegenerate")


def degenerate_boundary_matrix(quandle: FiniteRack, n: int) -> SparseIntMatrix:
    """∂_n restricted to CD_n → CD_{n-1}."""
    return _restricted_boundary(require_quandle(quandle), n, "degenerate", "degenerate")


def is_degenerate_subcomplex(quandle: FiniteRack, n: int) -> bool:
    """True iff ∂_n maps every degenerate n-tuple into the span of degenerate tuples."""
    quandle = require_quandle(quandle)
    leaking = _restricted_boundary(quandle, n, "degenerate", "nondegenerate")
    return leaking.is_zero()
