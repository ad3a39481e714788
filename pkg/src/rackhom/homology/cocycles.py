"""Second cohomology from the 2-cocycle identity.

A 2-cocycle is a function φ: X × X → A with

    φ(x▷y, x▷z) = φ(y, z) - φ(x, z) + φ(x, y▷z)   for all x, y, z,

taken modulo principal coboundaries φ_f(x, y) = f(y) - f(x▷y). In the
quandle theory φ also vanishes on the diagonal. The system is set up
directly from these identities, independently of the boundary matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from itertools import product
from typing import Literal, Mapping, Sequence

from sympy import isprime

from rackhom.algebra.table import FiniteRack, require_quandle
from rackhom.homology.coefficients import CoefficientSpec
from rackhom.linalg.complex import ChainComplex, cohomology_at, cohomology_mod
from rackhom.linalg.groups import AbelianGroupPresentation
from rackhom.linalg.modp import fp_nullspace, fp_row_reduce
from rackhom.linalg.smith import smith_decomposition
from rackhom.linalg.sparse import SparseIntMatrix
from rackhom.observability.logger import get_logger

logger = get_logger(__name__, json_format=False)

Pair = tuple[int, int]
Cochain = dict[Pair, int]


@dataclass(frozen=True)
class CocycleBasis:
    """H² with cocycle representatives over Z/m.

    Over a prime field the representatives complete a basis of the
    coboundaries. Over a composite modulus there is one per invariant factor
    of ``group``, of exactly that order. Over Z only the group is reported.
    """

    coefficient: CoefficientSpec
    theory: Literal["rack", "quandle"]
    group: AbelianGroupPresentation
    pairs: tuple[Pair, ...] = field(repr=False)
    representatives: tuple[Cochain, ...] = ()

    def to_dict(self) -> dict[str, object]:
        return {
            "coefficient": str(self.coefficient),
            "theory": self.theory,
            "group": self.group.to_dict(),
            "order": self.group.order,
            "representatives": [
                [[x, y, value] for (x, y), value in sorted(phi.items())]
                for phi in self.representatives
            ],
        }


def cocycle_unknowns(rack: FiniteRack, theory: Literal["rack", "quandle"]) -> tuple[Pair, ...]:
    pairs = product(range(rack.size), repeat=2)
    if theory == "quandle":
        return tuple((x, y) for x, y in pairs if x != y)
    return tuple(pairs)


def _cocycle_equations(rack: FiniteRack, pairs: Sequence[Pair]) -> SparseIntMatrix:
    """One row per triple: φ(x▷y, x▷z) - φ(y, z) + φ(x, z) - φ(x, y▷z)."""
    position = {pair: i for i, pair in enumerate(pairs)}
    op = rack.op
    triples = []
    for row, (x, y, z) in enumerate(product(range(rack.size), repeat=3)):
        for pair, sign in (
            ((op[x][y], op[x][z]), 1),
            ((y, z), -1),
            ((x, z), 1),
            ((x, op[y][z]), -1),
        ):
            col = position.get(pair)
            if col is not None:
                triples.append((row, col, sign))
    return SparseIntMatrix.from_triples(rack.size**3, len(pairs), triples)


def _coboundary_map(rack: FiniteRack, pairs: Sequence[Pair]) -> SparseIntMatrix:
    """f ↦ φ_f, with φ_f(x, y) = f(y) - f(x▷y)."""
    op = rack.op
    triples = []
    for row, (x, y) in enumerate(pairs):
        triples.append((row, y, 1))
        triples.append((row, op[x][y], -1))
    return SparseIntMatrix.from_triples(len(pairs), rack.size, triples)


def coboundary(rack: FiniteRack, f: Sequence[int], modulus: int | None = None) -> Cochain:
    """The principal coboundary φ_f as a full table of values."""
    values = {
        (x, y): f[y] - f[rack.op[x][y]]
        for x, y in product(range(rack.size), repeat=2)
    }
    if modulus is not None:
        values = {pair: v % modulus for pair, v in values.items()}
    return values


def is_cocycle(rack: FiniteRack, phi: Mapping[Pair, int], modulus: int | None = None) -> bool:
    """Check the 2-cocycle identity for φ (missing pairs read as 0)."""
    op = rack.op

    def value(x: int, y: int) -> int:
        return phi.get((x, y), 0)

    for x, y, z in product(range(rack.size), repeat=3):
        lhs = value(op[x][y], op[x][z])
        rhs = value(y, z) - value(x, z) + value(x, op[y][z])
        difference = lhs - rhs
        if (difference % modulus if modulus is not None else difference) != 0:
            return False
    return True


def _representatives(
    equations: SparseIntMatrix, coboundaries: SparseIntMatrix, p: int
) -> list[list[int]]:
    """Cocycles mod p completing a basis of the coboundary space to one of all cocycles."""
    cocycles = fp_nullspace(equations.to_dense(), equations.cols, p)
    spanning = [list(row) for row in coboundaries.transpose().to_dense()]
    rank = len(fp_row_reduce(spanning, equations.cols, p)[0]) if spanning else 0
    chosen: list[list[int]] = []
    for vector in cocycles:
        candidate = spanning + [vector]
        new_rank = len(fp_row_reduce(candidate, equations.cols, p)[0])
        if new_rank > rank:
            spanning, rank = candidate, new_rank
            chosen.append(vector)
    return chosen


def _multiply(left: list[list[int]], right: list[list[int]], inner: int) -> list[list[int]]:
    width = len(right[0]) if right else 0
    return [
        [sum(row[k] * right[k][j] for k in range(inner)) for j in range(width)]
        for row in left
    ]


def _torsion_representatives(
    equations: SparseIntMatrix, coboundaries: SparseIntMatrix, m: int
) -> list[list[int]]:
    """One cocycle mod m per invariant factor of H², in the order of the factors.

    With E = P·D·V⁻¹ the cocycles mod m are spanned by (m / gcd(dᵢ, m))·Veᵢ
    below the rank and by Veᵢ above it. Coboundaries in those coordinates
    are V⁻¹·C, and the Smith form of the resulting relations gives the
    factors together with the combinations of generators realizing them.
    """
    n = equations.cols
    if n == 0:
        return []
    solved = smith_decomposition(equations.to_dense(), n, right=True)
    r = solved.rank
    orders = [gcd(d, m) for d in solved.diagonal] + [m] * (n - r)
    generators = [
        [(m // orders[k] if k < r else 1) * solved.right[i][k] for i in range(n)]
        for k in range(n)
    ]
    # Rows below the rank vanish: coboundaries are integral cocycles.
    shifted = _multiply(solved.right_inverse, coboundaries.to_dense(), n)
    relations = [
        [orders[i] if i == j else 0 for j in range(n)] + shifted[i] for i in range(n)
    ]
    presented = smith_decomposition(relations, n + coboundaries.cols, left=True)
    combine = presented.left_inverse
    return [
        [sum(combine[k][j] * generators[k][i] for k in range(n)) % m for i in range(n)]
        for j, d in enumerate(presented.diagonal)
        if d > 1
    ]


def two_cocycles(
    rack: FiniteRack,
    coeff: CoefficientSpec,
    theory: Literal["rack", "quandle"] = "rack",
) -> CocycleBasis:
    """H²(X; A) of the rack or quandle theory, solved from the cocycle identity."""
    if theory == "quandle":
        require_quandle(rack)
    pairs = cocycle_unknowns(rack, theory)
    equations = _cocycle_equations(rack, pairs)
    coboundaries = _coboundary_map(rack, pairs)
    # The cochain maps f ↦ φ_f and φ ↦ (identity defect) as the transposes of a
    # three-term chain complex, so H² comes out of the Smith forms.
    dual = ChainComplex(
        {1: rack.size, 2: len(pairs), 3: equations.rows},
        {2: coboundaries.transpose(), 3: equations.transpose()},
    )
    if coeff.modulus is None:
        group = cohomology_at(dual, 2)
    else:
        group = cohomology_mod(dual, 2, coeff.modulus)

    representatives: tuple[Cochain, ...] = ()
    if coeff.modulus is not None:
        if isprime(coeff.modulus):
            vectors = _representatives(equations, coboundaries, coeff.modulus)
        else:
            vectors = _torsion_representatives(equations, coboundaries, coeff.modulus)
        representatives = tuple(
            {pair: v for pair, v in zip(pairs, vector) if v} for vector in vectors
        )
    logger.debug(
        "H² over %s (%s theory) on %d unknowns: %s",
        coeff,
        theory,
        len(pairs),
        group,
        extra={"theory": theory, "degree": 2},
    )
    return CocycleBasis(coeff, theory, group, pairs, representatives)
