"""The rack, degenerate and quandle complexes of one rack, built together."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Literal

from rackhom.algebra.table import FiniteRack
from rackhom.errors import BudgetExceededError, PreconditionError
from rackhom.homology.bases import TupleBasis, tuple_basis
from rackhom.homology.boundaries import (
    degenerate_boundary_matrix,
    quandle_boundary_matrix,
    rack_boundary_matrix,
)
from rackhom.linalg.complex import ChainComplex
from rackhom.observability.logger import get_logger

logger = get_logger(__name__, json_format=False)

Theory = Literal["rack", "quandle", "degenerate"]
THEORIES: tuple[Theory, ...] = ("rack", "quandle", "degenerate")


def largest_basis(size: int, top_degree: int) -> int:
    """Size of the biggest tuple basis built for chain degrees 0..top_degree."""
    return max(1, size**top_degree) if top_degree >= 0 else 1


def check_budget(size: int, top_degree: int, budget: int) -> None:
    needed = largest_basis(size, top_degree)
    if needed > budget:
        raise BudgetExceededError(
            f"Chain degree {top_degree} over {size} elements needs a basis of "
            f"{needed} tuples, above the budget of {budget}"
        )


@dataclass(frozen=True)
class RackComplexBundle:
    """CR, and for quandles CD and CQ, through chain degree ``max_degree + 1``.

    Homology and cohomology are exact in degrees 0..max_degree.
    """

    rack: FiniteRack
    max_degree: int
    cr: ChainComplex
    cd: ChainComplex | None
    cq: ChainComplex | None
    bases: dict[str, dict[int, TupleBasis]]

    @property
    def chain_degree(self) -> int:
        return self.max_degree + 1

    def complex(self, theory: Theory) -> ChainComplex:
        match theory:
            case "rack":
                return self.cr
            case "quandle":
                chosen = self.cq
            case "degenerate":
                chosen = self.cd
            case _:
                raise ValueError(f"Unknown theory {theory!r}; expected one of {THEORIES}")
        if chosen is None:
            raise PreconditionError(f"{theory} theory requires a quandle")
        return chosen

    def require_degree(self, n: int) -> None:
        if n > self.max_degree:
            raise PreconditionError(
                f"Degree {n} is above this bundle's exact range 0..{self.max_degree}"
            )


def build_bundle(
    rack: FiniteRack, max_degree: int, budget: int | None = None
) -> RackComplexBundle:
    """Build every complex the rack supports so that degrees 0..max_degree are exact."""
    if max_degree < 0:
        raise PreconditionError(f"max_degree must be non-negative, got {max_degree}")
    top = max_degree + 1
    if budget is not None:
        check_budget(rack.size, top, budget)
    started = time.perf_counter()
    degrees = range(top + 1)

    full = {n: tuple_basis(rack.size, n) for n in degrees}
    cr = ChainComplex(
        {n: len(full[n]) for n in degrees},
        {n: rack_boundary_matrix(rack, n) for n in range(1, top + 1)},
    )
    bases: dict[str, dict[int, TupleBasis]] = {"full": full}
    cd = cq = None
    if rack.is_quandle():
        degenerate = {n: tuple_basis(rack.size, n, "degenerate") for n in degrees}
        nondegenerate = {n: tuple_basis(rack.size, n, "nondegenerate") for n in degrees}
        cd = ChainComplex(
            {n: len(degenerate[n]) for n in degrees},
            {n: degenerate_boundary_matrix(rack, n) for n in range(1, top + 1)},
        )
        cq = ChainComplex(
            {n: len(nondegenerate[n]) for n in degrees},
            {n: quandle_boundary_matrix(rack, n) for n in range(1, top + 1)},
        )
        bases["degenerate"] = degenerate
        bases["nondegenerate"] = nondegenerate

    logger.info(
        "Built complexes for a rack of size %d through chain degree %d in %.3fs",
        rack.size,
        top,
        time.perf_counter() - started,
        extra={"degree": top, "theory": "quandle" if cq is not None else "rack"},
    )
    return RackComplexBundle(rack, max_degree, cr, cd, cq, bases)
