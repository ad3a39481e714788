"""Tests for YAML config loading."""

from __future__ import annotations

from pathlib import Path

import pytest
from pydantic import ValidationError

from rackhom.config import (
    BUDGET_ENV_VAR,
    DEFAULT_BASIS_BUDGET,
    FamilySpec,
    RackhomConfig,
    load_config,
)


def _write_yaml(tmp_path: Path, content: str) -> Path:
    p = tmp_path / "rackhom.yaml"
    p.write_text(content, encoding="utf-8")
    return p


class TestLoadConfig:
    def test_defaults(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.delenv(BUDGET_ENV_VAR, raising=False)
        config = load_config()
        assert config.max_degree == 5
        assert config.small_rack_degree == 5
        assert config.basis_budget == DEFAULT_BASIS_BUDGET
        labels = [spec.label for spec in config.corpus]
        assert "dihedral 3" in labels
        assert "conjugation-q8" in labels

    def test_full_config(self, tmp_path: Path) -> None:
        yaml_text = """
max_degree: 3
small_rack_size: 3
small_rack_degree: 4
moduli: [2, 5]
free_samples: 20
seed: 7
corpus:
  - family: dihedral
    params: [5]
  - family: alexander
    params: [5, 2]
  - family: conjugation-s3
"""
        config = load_config(_write_yaml(tmp_path, yaml_text))
        assert config.max_degree == 3
        assert config.moduli == [2, 5]
        assert config.seed == 7
        assert [spec.label for spec in config.corpus] == [
            "dihedral 5",
            "alexander 5 2",
            "conjugation-s3",
        ]

    def test_empty_file_gives_defaults(self, tmp_path: Path) -> None:
        config = load_config(_write_yaml(tmp_path, ""))
        assert config.max_degree == RackhomConfig().max_degree

    def test_missing_file(self) -> None:
        with pytest.raises(FileNotFoundError):
            load_config("/nonexistent/rackhom.yaml")

    def test_non_mapping_root(self, tmp_path: Path) -> None:
        with pytest.raises(ValueError, match="YAML mapping"):
            load_config(_write_yaml(tmp_path, "- 1\n- 2\n"))

    def test_malformed_yaml(self, tmp_path: Path) -> None:
        with pytest.raises(ValueError, match="Invalid YAML"):
            load_config(_write_yaml(tmp_path, "moduli: [2, 3\nseed: {\n"))

    def test_unknown_family(self, tmp_path: Path) -> None:
        yaml_text = """
corpus:
  - family: cyclic
    params: [3]
"""
        with pytest.raises(ValidationError, match="unknown family"):
            load_config(_write_yaml(tmp_path, yaml_text))

    def test_small_modulus_rejected(self) -> None:
        with pytest.raises(ValidationError, match="at least 2"):
            RackhomConfig(cocycle_moduli=[1, 2])

    def test_degree_floor(self) -> None:
        with pytest.raises(ValidationError):
            RackhomConfig(max_degree=1)


class TestEnvironment:
    def test_budget_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv(BUDGET_ENV_VAR, "500")
        assert load_config().basis_budget == 500

    def test_bad_budget(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv(BUDGET_ENV_VAR, "lots")
        with pytest.raises(ValueError, match=BUDGET_ENV_VAR):
            load_config()

    def test_non_positive_budget(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv(BUDGET_ENV_VAR, "0")
        with pytest.raises(ValueError, match="positive"):
            load_config()


class TestChainDegree:
    def test_small_racks_go_deeper(self) -> None:
        config = RackhomConfig(max_degree=3, small_rack_size=4, small_rack_degree=5)
        assert config.chain_degree_for(4) == 5
        assert config.chain_degree_for(5) == 3

    def test_family_label(self) -> None:
        assert FamilySpec(family="permutation", params=[1, 0]).label == "permutation 1 0"
