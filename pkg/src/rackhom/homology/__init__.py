"""Rack, degenerate and quandle complexes and their (co)homology."""

from rackhom.homology.bases import (
    TupleBasis,
    degenerate_inclusion,
    is_degenerate,
    nondegenerate_count,
    tuple_basis,
    tuple_index,
)
from rackhom.homology.boundaries import (
    degenerate_boundary_matrix,
    is_degenerate_subcomplex,
    quandle_boundary_matrix,
    rack_boundary_matrix,
)
from rackhom.homology.bundle import (
    THEORIES,
    RackComplexBundle,
    Theory,
    build_bundle,
    check_budget,
    largest_basis,
)
from rackhom.homology.cocycles import CocycleBasis, coboundary, is_cocycle, two_cocycles
from rackhom.homology.coefficients import INTEGERS, CoefficientSpec
from rackhom.homology.compute import (
    cohomology,
    degenerate_cohomology,
    degenerate_homology,
    derivations,
    homology,
    quandle_cohomology,
    quandle_homology,
    quillen_cohomology,
    rack_cohomology,
    rack_homology,
)

__all__ = [
    "INTEGERS",
    "THEORIES",
    "CocycleBasis",
    "CoefficientSpec",
    "RackComplexBundle",
    "Theory",
    "TupleBasis",
    "build_bundle",
    "check_budget",
    "coboundary",
    "cohomology",
    "degenerate_boundary_matrix",
    "degenerate_cohomology",
    "degenerate_homology",
    "degenerate_inclusion",
    "derivations",
    "homology",
    "is_cocycle",
    "is_degenerate",
    "is_degenerate_subcomplex",
    "largest_basis",
    "nondegenerate_count",
    "quandle_boundary_matrix",
    "quandle_cohomology",
    "quandle_homology",
    "quillen_cohomology",
    "rack_boundary_matrix",
    "rack_cohomology",
    "rack_homology",
    "tuple_basis",
    "tuple_index",
    "two_cocycles",
]
