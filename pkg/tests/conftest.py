"""Shared test fixtures."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Callable

import pytest

from rackhom.algebra import (
    FiniteQuandle,
    FiniteRack,
    build_family,
    make_dihedral,
    make_permutation_rack,
    make_trivial,
)
from rackhom.config import FamilySpec, RackhomConfig

RackFileFactory = Callable[..., Path]


@pytest.fixture
def write_rack(tmp_path: Path) -> RackFileFactory:
    """Write a rack file from rows (or a raw document) and return its path."""

    def _write(rows: Any, name: str = "rack.json", **extra: Any) -> Path:
        document = rows if isinstance(rows, dict) else {"size": len(rows), "op": rows, **extra}
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def dihedral3() -> FiniteQuandle:
    return make_dihedral(3)


@pytest.fixture
def dihedral4() -> FiniteQuandle:
    return make_dihedral(4)


@pytest.fixture
def trivial2() -> FiniteQuandle:
    return make_trivial(2)


@pytest.fixture
def swap_rack() -> FiniteRack:
    """Two-element rack x▷y = σ(y) with σ the swap; not a quandle."""
    return make_permutation_rack([1, 0])


@pytest.fixture
def conjugation_s3() -> FiniteRack:
    return build_family("conjugation-s3")


@pytest.fixture
def small_config() -> RackhomConfig:
    """A corpus small enough for the whole suite to run in a test."""
    return RackhomConfig(
        max_degree=3,
        small_rack_size=3,
        small_rack_degree=3,
        free_samples=50,
        free_max_length=4,
        corpus=[
            FamilySpec(family="trivial", params=[2]),
            FamilySpec(family="dihedral", params=[3]),
            FamilySpec(family="dihedral", params=[4]),
            FamilySpec(family="permutation", params=[1, 0]),
        ],
    )
