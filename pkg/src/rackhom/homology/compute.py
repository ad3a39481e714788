"""Rack, quandle and degenerate (co)homology, and Quillen cohomology by degree shift.

Quillen cohomology of a rack (or quandle) with trivial coefficients A is the
rack (or quandle) cohomology one degree up: Dⁿ(X; A) ≅ H^{n+1}(X; A).
"""

from __future__ import annotations

from typing import Literal

from rackhom.algebra.families import make_trivial
from rackhom.algebra.orbits import count_homomorphisms
from rackhom.algebra.table import FiniteRack, require_quandle
from rackhom.errors import PreconditionError
from rackhom.homology.bundle import RackComplexBundle, Theory, build_bundle
from rackhom.homology.coefficients import INTEGERS, CoefficientSpec
from rackhom.linalg.complex import cohomology_at, cohomology_mod, homology_at, homology_mod
from rackhom.linalg.groups import AbelianGroupPresentation

# count_homomorphisms enumerates m^|X| maps.
DERIVATION_SIZE_LIMIT = 6


def _bundle_for(
    rack: FiniteRack, theory: Theory, max_degree: int, bundle: RackComplexBundle | None
) -> RackComplexBundle:
    if theory != "rack":
        require_quandle(rack)
    if bundle is None:
        return build_bundle(rack, max_degree)
    bundle.require_degree(max_degree)
    return bundle


def homology(
    rack: FiniteRack,
    theory: Theory,
    max_degree: int,
    coeff: CoefficientSpec = INTEGERS,
    bundle: RackComplexBundle | None = None,
) -> list[AbelianGroupPresentation]:
    """H_0..H_max_degree of the complex of ``theory``."""
    complex_ = _bundle_for(rack, theory, max_degree, bundle).complex(theory)
    if coeff.modulus is None:
        return [homology_at(complex_, n) for n in range(max_degree + 1)]
    return [homology_mod(complex_, n, coeff.modulus) for n in range(max_degree + 1)]


def cohomology(
    rack: FiniteRack,
    theory: Theory,
    max_degree: int,
    coeff: CoefficientSpec = INTEGERS,
    bundle: RackComplexBundle | None = None,
) -> list[AbelianGroupPresentation]:
    """H^0..H^max_degree of Hom(C, A) for the complex of ``theory``."""
    complex_ = _bundle_for(rack, theory, max_degree, bundle).complex(theory)
    if coeff.modulus is None:
        return [cohomology_at(complex_, n) for n in range(max_degree + 1)]
    return [cohomology_mod(complex_, n, coeff.modulus) for n in range(max_degree + 1)]


def rack_homology(
    rack: FiniteRack,
    max_degree: int,
    coeff: CoefficientSpec = INTEGERS,
    bundle: RackComplexBundle | None = None,
) -> list[AbelianGroupPresentation]:
    return homology(rack, "rack", max_degree, coeff, bundle)


def quandle_homology(
    quandle: FiniteRack,
    max_degree: int,
    coeff: CoefficientSpec = INTEGERS,
    bundle: RackComplexBundle | None = None,
) -> list[AbelianGroupPresentation]:
    return homology(quandle, "quandle", max_degree, coeff, bundle)


def degenerate_homology(
    quandle: FiniteRack,
    max_degree: int,
    coeff: CoefficientSpec = INTEGERS,
    bundle: RackComplexBundle | None = None,
) -> list[AbelianGroupPresentation]:
    return homology(quandle, "degenerate", max_degree, coeff, bundle)


def rack_cohomology(
    rack: FiniteRack,
    max_degree: int,
    coeff: CoefficientSpec = INTEGERS,
    bundle: RackComplexBundle | None = None,
) -> list[AbelianGroupPresentation]:
    return cohomology(rack, "rack", max_degree, coeff, bundle)


def quandle_cohomology(
    quandle: FiniteRack,
    max_degree: int,
    coeff: CoefficientSpec = INTEGERS,
    bundle: RackComplexBundle | None = None,
) -> list[AbelianGroupPresentation]:
    return cohomology(quandle, "quandle", max_degree, coeff, bundle)


def degenerate_cohomology(
    quandle: FiniteRack,
    max_degree: int,
    coeff: CoefficientSpec = INTEGERS,
    bundle: RackComplexBundle | None = None,
) -> list[AbelianGroupPresentation]:
    return cohomology(quandle, "degenerate", max_degree, coeff, bundle)


def quillen_cohomology(
    rack: FiniteRack,
    theory: Literal["rack", "quandle"],
    n: int,
    coeff: CoefficientSpec = INTEGERS,
    bundle: RackComplexBundle | None = None,
) -> AbelianGroupPresentation:
    """Dⁿ(X; A) for the rack or quandle theory, read off as H^{n+1}(X; A)."""
    if theory not in ("rack", "quandle"):
        raise ValueError(f"Quillen cohomology is defined for 'rack' or 'quandle', got {theory!r}")
    if n < 0:
        raise PreconditionError(f"Degree must be non-negative, got {n}")
    return cohomology(rack, theory, n + 1, coeff, bundle)[n + 1]


def derivations(rack: FiniteRack, m: int) -> int:
    """|D⁰(X; Z/m)| counted directly as rack morphisms X → trivial quandle on m elements."""
    if m < 2:
        raise PreconditionError(f"Modulus must be at least 2, got {m}")
    if rack.size > DERIVATION_SIZE_LIMIT:
        raise PreconditionError(
            f"Brute-force derivation count supports at most {DERIVATION_SIZE_LIMIT} "
            f"elements, got {rack.size}"
        )
    return count_homomorphisms(rack, make_trivial(m))
