"""Check protocol and the shared corpus every check runs against."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Protocol

from rackhom.algebra.families import build_family
from rackhom.algebra.orbits import OrbitPartition, orbits
from rackhom.algebra.table import FiniteRack
from rackhom.config import FamilySpec, RackhomConfig
from rackhom.homology.bundle import RackComplexBundle, build_bundle
from rackhom.observability.logger import get_logger
from rackhom.observability.metrics import RunMetrics

logger = get_logger(__name__, json_format=False)


@dataclass
class CorpusEntry:
    """One rack of the corpus with its complexes, built on first use."""

    label: str
    rack: FiniteRack
    max_degree: int
    metrics: RunMetrics
    budget: int
    _bundle: RackComplexBundle | None = field(default=None, repr=False)
    _orbits: OrbitPartition | None = field(default=None, repr=False)

    @property
    def bundle(self) -> RackComplexBundle:
        if self._bundle is None:
            logger.info(
                "Building complexes for %s",
                self.label,
                extra={"rack": self.label, "degree": self.max_degree + 1},
            )
            self._bundle = build_bundle(self.rack, self.max_degree, self.budget)
            for complex_ in (self._bundle.cr, self._bundle.cd, self._bundle.cq):
                if complex_ is not None:
                    complex_.metrics = self.metrics
        return self._bundle

    @property
    def orbits(self) -> OrbitPartition:
        if self._orbits is None:
            self._orbits = orbits(self.rack)
        return self._orbits

    @property
    def is_quandle(self) -> bool:
        return self.rack.is_quandle()


@dataclass
class SuiteContext:
    config: RackhomConfig
    metrics: RunMetrics = field(default_factory=RunMetrics)
    _entries: list[CorpusEntry] | None = field(default=None, repr=False)

    @property
    def entries(self) -> list[CorpusEntry]:
        if self._entries is None:
            self._entries = [self.entry_for(spec) for spec in self.config.corpus]
        return self._entries

    def entry_for(self, spec: FamilySpec) -> CorpusEntry:
        rack = build_family(spec.family, spec.params)
        # Homology is exact one degree below the highest chain degree built.
        max_degree = self.config.chain_degree_for(rack.size) - 1
        return CorpusEntry(spec.label, rack, max_degree, self.metrics, self.config.basis_budget)

    @property
    def quandles(self) -> list[CorpusEntry]:
        return [entry for entry in self.entries if entry.is_quandle]


class Check(Protocol):
    """One acceptance property; ``run`` returns failure details, empty when it holds."""

    name: str

    def run(self, context: SuiteContext) -> list[str]:
        ...
