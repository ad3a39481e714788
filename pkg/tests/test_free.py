"""Tests for free-group words and free rack/quandle elements."""

from __future__ import annotations

import random
from collections import defaultdict
from typing import Callable

import pytest

from rackhom.algebra import FiniteQuandle, FiniteRack, make_trivial
from rackhom.free import (
    EMPTY_WORD,
    FreeElement,
    FreeGroupWord,
    FreeQuandleElement,
    FreeRackElement,
    as_group_word,
    extend_map,
    fg_concat,
    fg_inverse,
    format_element,
    format_word,
    fq_canonicalize,
    fq_op,
    fr_inverse_op,
    fr_op,
    generator,
    parse_element,
    parse_word,
    random_element,
    reduced_words,
)
from rackhom.linalg import AbelianGroupPresentation, ChainComplex, SparseIntMatrix, homology_at


class TestWords:
    def test_parse_and_format(self) -> None:
        word = parse_word("a b' a")
        assert word.letters == (("a", 1), ("b", -1), ("a", 1))
        assert format_word(word) == "a b' a"

    def test_parse_reduces(self) -> None:
        assert parse_word("a b b' a'") == EMPTY_WORD

    def test_empty_word_spelling(self) -> None:
        assert parse_word("1") == EMPTY_WORD
        assert parse_word("") == EMPTY_WORD
        assert format_word(EMPTY_WORD) == "1"

    def test_invalid_token(self) -> None:
        with pytest.raises(ValueError, match="Invalid generator"):
            parse_word("a B")

    def test_inverse_and_concat(self) -> None:
        word = parse_word("a b c'")
        assert fg_inverse(word) == parse_word("c b' a'")
        assert fg_concat(word, fg_inverse(word)) == EMPTY_WORD

    def test_reduced_words_count(self) -> None:
        # 1 + 4 + 4·3 reduced words of length at most 2 on two generators.
        words = reduced_words(["a", "b"], 2)
        assert len(words) == 17
        assert all(w.is_reduced() for w in words)
        assert len(set(words)) == 17


class TestFreeRack:
    def test_parse_element(self) -> None:
        x = parse_element("a b' | a")
        assert x.conjugator == parse_word("a b'")
        assert x.generator == "a"
        assert format_element(x) == "a b' | a"
        assert parse_element("b") == generator("b")

    def test_parse_element_rejects_word_generator(self) -> None:
        with pytest.raises(ValueError, match="single generator"):
            parse_element("a | a b")

    def test_unreduced_conjugator_rejected(self) -> None:
        with pytest.raises(ValueError, match="not freely reduced"):
            FreeRackElement(FreeGroupWord((("a", 1), ("a", -1))), "b")

    def test_operation_formula(self) -> None:
        a, b = generator("a"), generator("b")
        assert fr_op(a, b) == parse_element("a | b")
        assert fr_op(a, a) == parse_element("a | a")
        assert fr_op(a, a) != a

    def test_inverse_operation_undoes(self) -> None:
        rng = random.Random(7)
        for _ in range(50):
            x = random_element(rng, ["a", "b"], 4)
            y = random_element(rng, ["a", "b"], 4)
            assert fr_inverse_op(x, fr_op(x, y)) == y
            assert fr_op(x, fr_inverse_op(x, y)) == y

    def test_self_distributivity(self) -> None:
        rng = random.Random(11)
        for _ in range(50):
            x, y, z = (random_element(rng, ["a", "b", "c"], 3) for _ in range(3))
            assert fr_op(x, fr_op(y, z)) == fr_op(fr_op(x, y), fr_op(x, z))

    def test_group_word_is_conjugate(self) -> None:
        assert as_group_word(parse_element("b | a")) == parse_word("b a b'")


class TestFreeQuandle:
    def test_canonicalize_strips_generator_powers(self) -> None:
        x = parse_element("b a a | a")
        assert fq_canonicalize(x) == FreeQuandleElement(parse_word("b"), "a")

    def test_non_canonical_rejected(self) -> None:
        with pytest.raises(ValueError, match="fq_canonicalize"):
            FreeQuandleElement(parse_word("b a'"), "a")

    def test_idempotence(self) -> None:
        rng = random.Random(3)
        for _ in range(30):
            x = fq_canonicalize(random_element(rng, ["a", "b"], 4))
            assert fq_op(x, x) == x

    def test_canonical_form_matches_group_word(self) -> None:
        # Two free-rack elements agree in the free quandle iff their conjugates agree.
        rng = random.Random(5)
        for _ in range(50):
            x = random_element(rng, ["a", "b"], 4)
            y = random_element(rng, ["a", "b"], 4)
            same_quandle = fq_canonicalize(x) == fq_canonicalize(y)
            same_conjugate = as_group_word(x) == as_group_word(y)
            assert same_quandle == same_conjugate


class TestExtendMap:
    def test_generator_maps_to_assignment(self, dihedral3: FiniteQuandle) -> None:
        assert extend_map({"a": 2}, dihedral3, generator("a")) == 2

    def test_innermost_letter_acts_first(self, dihedral3: FiniteQuandle) -> None:
        # (a b | c) evaluates to a▷(b▷c).
        assignment = {"a": 0, "b": 1, "c": 2}
        x = parse_element("a b | c")
        assert extend_map(assignment, dihedral3, x) == dihedral3.act(0, dihedral3.act(1, 2))

    def test_inverse_letter_uses_inverse_row(self, swap_rack: FiniteRack) -> None:
        x = parse_element("a' | b")
        assert extend_map({"a": 0, "b": 0}, swap_rack, x) == 1

    def test_extension_is_homomorphism(self, dihedral4: FiniteQuandle) -> None:
        rng = random.Random(13)
        assignment = {"a": 1, "b": 2}
        for _ in range(50):
            x = random_element(rng, ["a", "b"], 4)
            y = random_element(rng, ["a", "b"], 4)
            image = extend_map(assignment, dihedral4, fr_op(x, y))
            expected = dihedral4.act(
                extend_map(assignment, dihedral4, x), extend_map(assignment, dihedral4, y)
            )
            assert image == expected

    def test_quandle_canonical_form_evaluates_alike(self, dihedral4: FiniteQuandle) -> None:
        rng = random.Random(17)
        assignment = {"a": 3, "b": 0}
        for _ in range(30):
            x = random_element(rng, ["a", "b"], 4)
            assert extend_map(assignment, dihedral4, x) == extend_map(
                assignment, dihedral4, fq_canonicalize(x)
            )

    def test_trivial_target_ignores_conjugator(self) -> None:
        x = parse_element("a b' a | b")
        assert extend_map({"a": 0, "b": 1}, make_trivial(2), x) == 1


def _ball(names: list[str], radius: int, quandle: bool) -> list[FreeElement]:
    elements: list[FreeElement] = [
        FreeRackElement(word, name) for word in reduced_words(names, radius) for name in names
    ]
    if quandle:
        elements = list(dict.fromkeys(fq_canonicalize(x) for x in elements))
    return elements


def _low_degree_homology(
    elements: list[FreeElement], op: Callable[[FreeElement, FreeElement], FreeElement]
) -> tuple[AbelianGroupPresentation, AbelianGroupPresentation]:
    """H_0 and H_1 of the complex spanned by a ball, with 2-chains x▷y − y inside it."""
    index = {x: i for i, x in enumerate(elements)}
    columns: list[dict[int, int]] = []
    for x in elements:
        for y in elements:
            target = index.get(op(x, y))
            if target is None:
                continue
            column: dict[int, int] = defaultdict(int)
            column[target] += 1
            column[index[y]] -= 1
            columns.append(column)
    complex_ = ChainComplex(
        {0: 1, 1: len(elements), 2: len(columns)},
        {2: SparseIntMatrix.from_columns(len(elements), columns)},
    )
    return homology_at(complex_, 0), homology_at(complex_, 1)


class TestFreeHomology:
    """HR_*(FR_g) = HQ_*(FQ_g) = Z, Z^g, 0; degrees 0 and 1 are visible on a finite ball."""

    @pytest.mark.parametrize("names,radius", [(["a"], 3), (["a", "b"], 2), (["a", "b", "c"], 1)])
    def test_free_rack_ball(self, names: list[str], radius: int) -> None:
        h0, h1 = _low_degree_homology(_ball(names, radius, quandle=False), fr_op)
        assert h0 == AbelianGroupPresentation(1)
        assert h1 == AbelianGroupPresentation(len(names))

    @pytest.mark.parametrize("names,radius", [(["a"], 3), (["a", "b"], 2), (["a", "b", "c"], 1)])
    def test_free_quandle_ball(self, names: list[str], radius: int) -> None:
        h0, h1 = _low_degree_homology(_ball(names, radius, quandle=True), fq_op)
        assert h0 == AbelianGroupPresentation(1)
        assert h1 == AbelianGroupPresentation(len(names))

    def test_orbits_are_labelled_by_generators(self) -> None:
        rng = random.Random(19)
        for _ in range(50):
            x = random_element(rng, ["a", "b", "c"], 4)
            y = random_element(rng, ["a", "b", "c"], 4)
            assert fr_op(x, y).generator == y.generator
            assert fq_op(x, y).generator == y.generator
