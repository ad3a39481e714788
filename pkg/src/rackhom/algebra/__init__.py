"""Finite racks and quandles as validated operation tables."""

from rackhom.algebra.families import (
    build_family,
    make_alexander,
    make_conjugation,
    make_dihedral,
    make_permutation_rack,
    make_trivial,
    quaternion_group,
    symmetric_group,
)
from rackhom.algebra.orbits import (
    OrbitPartition,
    count_homomorphisms,
    is_homomorphism,
    orbits,
)
from rackhom.algebra.table import (
    BinaryTable,
    FiniteQuandle,
    FiniteRack,
    Violation,
    relabel,
    require_quandle,
    validate_group,
    validate_quandle,
    validate_rack,
)

__all__ = [
    "BinaryTable",
    "FiniteQuandle",
    "FiniteRack",
    "OrbitPartition",
    "Violation",
    "build_family",
    "count_homomorphisms",
    "is_homomorphism",
    "make_alexander",
    "make_conjugation",
    "make_dihedral",
    "make_permutation_rack",
    "make_trivial",
    "orbits",
    "quaternion_group",
    "relabel",
    "require_quandle",
    "symmetric_group",
    "validate_group",
    "validate_quandle",
    "validate_rack",
]
