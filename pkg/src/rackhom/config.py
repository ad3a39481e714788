"""Run configuration parsed from YAML, with environment overrides."""

from __future__ import annotations

import os
from pathlib import Path

import yaml
from pydantic import BaseModel, Field, field_validator

from rackhom.algebra.families import FAMILY_NAMES

BUDGET_ENV_VAR = "RACKHOM_BASIS_BUDGET"
DEFAULT_BASIS_BUDGET = 1_000_000


class FamilySpec(BaseModel):
    """One corpus member, e.g. ``{family: dihedral, params: [5]}``."""

    family: str
    params: list[int] = Field(default_factory=list)

    @field_validator("family")
    @classmethod
    def _known_family(cls, value: str) -> str:
        if value not in FAMILY_NAMES:
            raise ValueError(f"unknown family {value!r}; expected one of {list(FAMILY_NAMES)}")
        return value

    @property
    def label(self) -> str:
        return " ".join([self.family, *map(str, self.params)])


def default_corpus() -> list[FamilySpec]:
    return [
        *(FamilySpec(family="trivial", params=[h]) for h in (1, 2, 3)),
        *(FamilySpec(family="dihedral", params=[n]) for n in range(3, 10)),
        FamilySpec(family="alexander", params=[5, 2]),
        FamilySpec(family="alexander", params=[8, 3]),
        FamilySpec(family="conjugation-s3"),
        FamilySpec(family="conjugation-q8"),
    ]


class RackhomConfig(BaseModel):
    """Top-level configuration for the verification suite and CLI guards."""

    max_degree: int = Field(default=5, ge=2)
    small_rack_size: int = Field(default=4, ge=0)
    small_rack_degree: int = Field(default=5, ge=2)
    basis_budget: int = Field(default=DEFAULT_BASIS_BUDGET, gt=0)
    moduli: list[int] = Field(default_factory=lambda: [2, 3])
    cocycle_moduli: list[int] = Field(default_factory=lambda: [2, 3, 5])
    orbit_moduli: list[int] = Field(default_factory=lambda: [2, 3, 4])
    free_samples: int = Field(default=1000, ge=1)
    free_max_length: int = Field(default=8, ge=0)
    seed: int = 0
    corpus: list[FamilySpec] = Field(default_factory=default_corpus)
    log_json: bool = False

    @field_validator("moduli", "cocycle_moduli", "orbit_moduli")
    @classmethod
    def _moduli_at_least_two(cls, values: list[int]) -> list[int]:
        for m in values:
            if m < 2:
                raise ValueError(f"modulus must be at least 2, got {m}")
        return values

    def chain_degree_for(self, size: int) -> int:
        """Highest chain degree the suite builds for a rack of ``size`` elements."""
        if size <= self.small_rack_size:
            return max(self.max_degree, self.small_rack_degree)
        return self.max_degree


def apply_env_overrides(config: RackhomConfig) -> RackhomConfig:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return config
    try:
        budget = int(raw)
    except ValueError as e:
        raise ValueError(f"{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}") from e
    if budget <= 0:
        raise ValueError(f"{BUDGET_ENV_VAR} must be a positive integer, got {raw!r}")
    return config.model_copy(update={"basis_budget": budget})


def load_config(path: str | Path | None = None) -> RackhomConfig:
    """Load a config from YAML (defaults when ``path`` is None) and apply the environment."""
    if path is None:
        return apply_env_overrides(RackhomConfig())

    config_path = Path(path)
    if not config_path.exists():
        raise FileNotFoundError(f"Config file not found: {config_path}")

    with open(config_path, "r", encoding="utf-8") as f:
        try:
            raw = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ValueError(f"Invalid YAML in {config_path}: {e}") from e

    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ValueError(f"Invalid config: expected a YAML mapping, got {type(raw).__name__}")

    return apply_env_overrides(RackhomConfig(**raw))
