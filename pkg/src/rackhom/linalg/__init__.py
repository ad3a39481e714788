"""Exact integer linear algebra: sparse matrices, Smith forms, chain complexes."""

from rackhom.linalg.complex import (
    ChainComplex,
    cohomology_at,
    cohomology_mod,
    compose_check,
    homology_at,
    homology_dim_fp,
    homology_mod,
)
from rackhom.linalg.elimination import (
    MarkowitzPivot,
    PivotPolicy,
    SmallestEntryPivot,
    Workspace,
)
from rackhom.linalg.groups import AbelianGroupPresentation, invariant_factors
from rackhom.linalg.modp import fp_nullspace, fp_rank, fp_row_reduce
from rackhom.linalg.smith import (
    SmithDecomposition,
    SmithForm,
    smith_decomposition,
    smith_normal_form,
)
from rackhom.linalg.sparse import SparseIntMatrix

__all__ = [
    "AbelianGroupPresentation",
    "ChainComplex",
    "MarkowitzPivot",
    "PivotPolicy",
    "SmallestEntryPivot",
    "SmithDecomposition",
    "SmithForm",
    "SparseIntMatrix",
    "Workspace",
    "cohomology_at",
    "cohomology_mod",
    "compose_check",
    "fp_nullspace",
    "fp_rank",
    "fp_row_reduce",
    "homology_at",
    "homology_dim_fp",
    "homology_mod",
    "invariant_factors",
    "smith_decomposition",
    "smith_normal_form",
]
