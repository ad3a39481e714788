"""Shared type aliases for rackhom."""

from __future__ import annotations

from typing import Any

# Elements of a finite rack are 0-based indices.
Element = int
Row = tuple[int, ...]
OpTable = tuple[Row, ...]
# A basis tuple of CR_n; the empty tuple spans degree 0.
Chain = tuple[int, ...]
JSONDict = dict[str, Any]
