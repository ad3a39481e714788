"""Free chain complexes of finite rank and their (co)homology.

Degrees that a complex does not list have rank zero, and a missing boundary
is the zero map of the right shape. A complex built through degree N
therefore gives exact homology only through degree N - 1.
"""

from __future__ import annotations

from typing import Mapping

from rackhom.errors import PreconditionError, ShapeMismatchError
from rackhom.linalg.groups import AbelianGroupPresentation
from rackhom.linalg.modp import fp_rank
from rackhom.linalg.elimination import PivotPolicy
from rackhom.linalg.smith import SmithForm, smith_normal_form
from rackhom.linalg.sparse import SparseIntMatrix
from rackhom.observability.metrics import RunMetrics


class ChainComplex:
    """Ranks ``dims[n]`` and boundaries ``boundaries[n]: C_n → C_{n-1}``.

    Smith forms and F_p ranks are computed on first use and cached per degree.
    """

    def __init__(
        self,
        dims: Mapping[int, int],
        boundaries: Mapping[int, SparseIntMatrix],
        policy: PivotPolicy | None = None,
    ) -> None:
        self.dims = dict(dims)
        self.boundaries = dict(boundaries)
        self.policy = policy
        self.metrics: RunMetrics | None = None
        self._smith: dict[int, SmithForm] = {}
        self._fp_ranks: dict[tuple[int, int], int] = {}
        for n, matrix in self.boundaries.items():
            expected = (self.dim(n - 1), self.dim(n))
            if matrix.shape != expected:
                raise ShapeMismatchError(
                    f"Boundary in degree {n} has shape {matrix.shape}, expected {expected}"
                )

    @property
    def degrees(self) -> list[int]:
        return sorted(self.dims)

    def dim(self, n: int) -> int:
        return self.dims.get(n, 0)

    def boundary(self, n: int) -> SparseIntMatrix:
        matrix = self.boundaries.get(n)
        if matrix is None:
            return SparseIntMatrix.zeros(self.dim(n - 1), self.dim(n))
        return matrix

    def smith(self, n: int) -> SmithForm:
        form = self._smith.get(n)
        if form is None:
            form = smith_normal_form(self.boundary(n), self.policy)
            self._smith[n] = form
            if self.metrics is not None:
                self.metrics.matrices_reduced += 1
                self.metrics.pivots += form.rank
        return form

    def rank(self, n: int) -> int:
        if n not in self.boundaries:
            return 0
        return self.smith(n).rank

    def fp_rank(self, n: int, p: int) -> int:
        if n not in self.boundaries:
            return 0
        rank = self._fp_ranks.get((n, p))
        if rank is None:
            rank = fp_rank(self.boundary(n), p, self.policy)
            self._fp_ranks[(n, p)] = rank
        return rank

    def with_policy(self, policy: PivotPolicy) -> ChainComplex:
        """Same complex with an empty cache and a different pivot policy."""
        return ChainComplex(self.dims, self.boundaries, policy)


def compose_check(c: ChainComplex) -> bool:
    """True iff ∂_n ∘ ∂_{n+1} vanishes wherever both maps are present."""
    for n, upper in c.boundaries.items():
        lower = c.boundaries.get(n - 1)
        if lower is not None and not (lower @ upper).is_zero():
            return False
    return True


def _torsion(c: ChainComplex, n: int) -> tuple[int, ...]:
    return c.smith(n).torsion if n in c.boundaries else ()


def homology_at(c: ChainComplex, n: int) -> AbelianGroupPresentation:
    """H_n = Z^(dim - rank ∂_n - rank ∂_{n+1}) ⊕ torsion of coker ∂_{n+1}."""
    free_rank = c.dim(n) - c.rank(n) - c.rank(n + 1)
    return AbelianGroupPresentation.from_orders(free_rank, _torsion(c, n + 1))


def homology_mod(c: ChainComplex, n: int, m: int) -> AbelianGroupPresentation:
    """H_n(C ⊗ Z/m) = H_n ⊗ Z/m ⊕ Tor(H_{n-1}, Z/m)."""
    if m < 2:
        raise PreconditionError(f"Modulus must be at least 2, got {m}")
    return homology_at(c, n).tensor_mod(m).direct_sum(homology_at(c, n - 1).tor_mod(m))


def cohomology_at(c: ChainComplex, n: int) -> AbelianGroupPresentation:
    """H^n of Hom(C, Z), whose coboundary δ^n is the transpose of ∂_{n+1}.

    Transposition preserves Smith forms, so the torsion of H^n is the
    torsion of coker δ^{n-1} = coker ∂_nᵀ, read from the form of ∂_n.
    """
    free_rank = c.dim(n) - c.rank(n + 1) - c.rank(n)
    return AbelianGroupPresentation.from_orders(free_rank, _torsion(c, n))


def cohomology_mod(c: ChainComplex, n: int, m: int) -> AbelianGroupPresentation:
    """H^n(C; Z/m) = H^n ⊗ Z/m ⊕ Tor(H^{n+1}, Z/m).

    Only the torsion of H^{n+1} enters, which lives in coker ∂_{n+1}ᵀ, so
    no boundary above degree n+1 is needed.
    """
    if m < 2:
        raise PreconditionError(f"Modulus must be at least 2, got {m}")
    upper = AbelianGroupPresentation.from_orders(0, _torsion(c, n + 1))
    return cohomology_at(c, n).tensor_mod(m).direct_sum(upper.tor_mod(m))


def homology_dim_fp(c: ChainComplex, n: int, p: int) -> int:
    """dim over F_p of H_n(C ⊗ F_p), by elimination mod p alone."""
    return c.dim(n) - c.fp_rank(n, p) - c.fp_rank(n + 1, p)
