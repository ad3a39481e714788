"""Tests for rack files and result documents."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from rackhom.algebra import make_dihedral
from rackhom.errors import MalformedTableError, RackFileError
from rackhom.formats import (
    EXACT_INT_LIMIT,
    GroupEntry,
    InputDescriptor,
    ResultDocument,
    dump_rack,
    exact_int,
    load_rack_file,
    parse_rack_document,
    transpose_table,
)
from rackhom.linalg import AbelianGroupPresentation
from tests.conftest import RackFileFactory


class TestLoadRackFile:
    def test_load(self, write_rack: RackFileFactory) -> None:
        path = write_rack([[0, 2, 1], [2, 1, 0], [1, 0, 2]])
        table = load_rack_file(path)
        assert table == make_dihedral(3).table

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(FileNotFoundError):
            load_rack_file(tmp_path / "missing.json")

    def test_bad_json_reports_position(self, tmp_path: Path) -> None:
        path = tmp_path / "broken.json"
        path.write_text('{"size": 2,\n "op": [[0, 1], [1, 0]', encoding="utf-8")
        with pytest.raises(RackFileError, match=r"broken\.json:2:"):
            load_rack_file(path)

    def test_unknown_key_rejected(self, write_rack: RackFileFactory) -> None:
        path = write_rack({"size": 1, "op": [[0]], "name": "point"})
        with pytest.raises(RackFileError, match="name"):
            load_rack_file(path)

    def test_non_integer_entry_reports_path(self, write_rack: RackFileFactory) -> None:
        path = write_rack({"size": 2, "op": [[0, 1], [1, "0"]]})
        with pytest.raises(RackFileError, match=r"op\.1\.1"):
            load_rack_file(path)

    def test_negative_size(self, write_rack: RackFileFactory) -> None:
        with pytest.raises(RackFileError, match="size"):
            load_rack_file(write_rack({"size": -1, "op": []}))

    def test_ragged_table(self, write_rack: RackFileFactory) -> None:
        with pytest.raises(MalformedTableError):
            load_rack_file(write_rack({"size": 2, "op": [[0, 1], [1]]}))

    def test_right_convention_transposes(self, write_rack: RackFileFactory) -> None:
        # The right table y◁x = σ(y), σ the swap, becomes op[x][y] = σ(y).
        rows = [[1, 1], [0, 0]]
        table = load_rack_file(write_rack(rows, convention="right"))
        assert table.to_rows() == [[1, 0], [1, 0]]

    def test_convention_override(self, write_rack: RackFileFactory) -> None:
        rows = [[1, 1], [0, 0]]
        path = write_rack(rows, convention="right")
        assert load_rack_file(path, "left").to_rows() == rows

    def test_parse_document_directly(self) -> None:
        table = parse_rack_document({"size": 1, "op": [[0]]})
        assert table.size == 1

    def test_empty_rack(self, write_rack: RackFileFactory) -> None:
        assert load_rack_file(write_rack([])).size == 0


class TestDump:
    def test_dump_loads_back(self, write_rack: RackFileFactory) -> None:
        table = make_dihedral(5).table
        document = dump_rack(table)
        assert document["size"] == 5
        assert load_rack_file(write_rack(document)) == table

    def test_transpose_is_involution(self) -> None:
        table = make_dihedral(4).table
        assert transpose_table(transpose_table(table)) == table


class TestResultDocument:
    def test_exact_int(self) -> None:
        assert exact_int(EXACT_INT_LIMIT) == EXACT_INT_LIMIT
        assert exact_int(EXACT_INT_LIMIT + 1) == str(EXACT_INT_LIMIT + 1)

    def test_group_entry(self) -> None:
        entry = GroupEntry.from_presentation(3, AbelianGroupPresentation(0, (3,)))
        assert entry.model_dump() == {"degree": 3, "free_rank": 0, "torsion": [3], "order": 3}
        infinite = GroupEntry.from_presentation(0, AbelianGroupPresentation(1))
        assert infinite.order is None

    def test_large_torsion_as_string(self) -> None:
        big = 2**60
        entry = GroupEntry.from_presentation(1, AbelianGroupPresentation(0, (big,)))
        assert entry.torsion == [str(big)]

    def test_body_excludes_timing(self) -> None:
        document = ResultDocument(
            input=InputDescriptor(source="r.json", size=3, is_quandle=True, orbit_count=1),
            theory="quandle",
            kind="homology",
            coefficient="Z",
            degrees=[0],
            groups=[GroupEntry.from_presentation(0, AbelianGroupPresentation(1))],
            timing={"duration_seconds": 0.5},
        )
        body = document.body()
        assert "timing" not in body
        assert "shifted_from" not in body
        parsed = json.loads(document.to_json())
        assert parsed["timing"] == {"duration_seconds": 0.5}
        assert parsed["groups"][0]["free_rank"] == 1
