"""Elements of free racks and free quandles as formal conjugates.

An element ``(w, a)`` stands for the conjugate w·a·w⁻¹ of the generator
``a``. In the free rack distinct pairs are distinct elements; in the free
quandle ``(w·a^k, a)`` and ``(w, a)`` coincide, and the canonical
representative carries no trailing powers of its generator.

Free objects are infinite, so their homology is never computed here. The
known values are HR_n(FR_g) = HQ_n(FQ_g) = Z, Z^g, 0, 0, ... for n = 0, 1,
2, 3, ...: each generator spans its own orbit, and nothing survives above
degree 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from rackhom.algebra.table import FiniteRack
from rackhom.free.words import (
    EMPTY_WORD,
    FreeGroupWord,
    fg_concat,
    fg_inverse,
    format_word,
    parse_word,
    random_word,
)
from rackhom.types import Element


@dataclass(frozen=True)
class FreeRackElement:
    conjugator: FreeGroupWord
    generator: str

    def __post_init__(self) -> None:
        if not self.conjugator.is_reduced():
            raise ValueError(f"Conjugator {self.conjugator} is not freely reduced")

    def __str__(self) -> str:
        return format_element(self)


@dataclass(frozen=True)
class FreeQuandleElement:
    conjugator: FreeGroupWord
    generator: str

    def __post_init__(self) -> None:
        if not self.conjugator.is_reduced():
            raise ValueError(f"Conjugator {self.conjugator} is not freely reduced")
        letters = self.conjugator.letters
        if letters and letters[-1][0] == self.generator:
            raise ValueError(
                f"Conjugator {self.conjugator} ends in a power of {self.generator}; "
                "use fq_canonicalize"
            )

    def __str__(self) -> str:
        return format_element(self)


FreeElement = Union[FreeRackElement, FreeQuandleElement]


def generator(name: str) -> FreeRackElement:
    return FreeRackElement(EMPTY_WORD, name)


def _single(name: str, exponent: int) -> FreeGroupWord:
    return FreeGroupWord(((name, exponent),))


def fr_op(x: FreeElement, y: FreeElement) -> FreeRackElement:
    """(w, a) ▷ (v, b) = (w a w⁻¹ v, b)."""
    w = x.conjugator
    return FreeRackElement(
        fg_concat(w, _single(x.generator, 1), fg_inverse(w), y.conjugator), y.generator
    )


def fr_inverse_op(x: FreeElement, y: FreeElement) -> FreeRackElement:
    """Inverse of the left translation by x: (w a⁻¹ w⁻¹ v, b)."""
    w = x.conjugator
    return FreeRackElement(
        fg_concat(w, _single(x.generator, -1), fg_inverse(w), y.conjugator), y.generator
    )


def fq_canonicalize(x: FreeElement) -> FreeQuandleElement:
    """Strip trailing powers of the generator from the conjugator."""
    letters = list(x.conjugator.letters)
    while letters and letters[-1][0] == x.generator:
        letters.pop()
    return FreeQuandleElement(FreeGroupWord(tuple(letters)), x.generator)


def fq_op(x: FreeElement, y: FreeElement) -> FreeQuandleElement:
    return fq_canonicalize(fr_op(x, y))


def as_group_word(x: FreeElement) -> FreeGroupWord:
    """The free-group element w·g·w⁻¹ represented by ``x``."""
    w = x.conjugator
    return fg_concat(w, _single(x.generator, 1), fg_inverse(w))


def extend_map(
    assignment: Mapping[str, Element], target: FiniteRack, x: FreeElement
) -> Element:
    """Evaluate ``x`` in ``target`` under the generator assignment.

    The conjugator acts innermost letter first: (g₁…g_k, a) evaluates to
    L_{g₁}(…L_{g_k}(a)), where L_g is the left translation by the image of g
    and g⁻¹ acts through the inverse permutation of that row.
    """
    value = assignment[x.generator]
    inverse_rows = target.inverse_rows
    for name, exponent in reversed(x.conjugator.letters):
        actor = assignment[name]
        value = target.op[actor][value] if exponent == 1 else inverse_rows[actor][value]
    return value


def parse_element(text: str) -> FreeRackElement:
    """Parse ``a b' | a`` (conjugator, bar, generator); a bare ``a`` is a generator."""
    conjugator_text, bar, name = text.rpartition("|")
    if not bar:
        conjugator_text, name = "", text
    name = name.strip()
    generator_word = parse_word(name)
    if len(generator_word) != 1 or generator_word.letters[0][1] != 1:
        raise ValueError(f"Expected a single generator after '|', got {name!r}")
    return FreeRackElement(parse_word(conjugator_text), name)


def format_element(x: FreeElement) -> str:
    if not x.conjugator.letters:
        return x.generator
    return f"{format_word(x.conjugator)} | {x.generator}"


def random_element(
    rng: random.Random, alphabet: Sequence[str], max_length: int
) -> FreeRackElement:
    return FreeRackElement(random_word(rng, alphabet, max_length), rng.choice(alphabet))


def reduced_words(alphabet: Sequence[str], max_length: int) -> list[FreeGroupWord]:
    """All reduced words of length at most ``max_length``, shortest first."""
    words = [EMPTY_WORD]
    frontier = [EMPTY_WORD]
    for _ in range(max_length):
        grown = []
        for word in frontier:
            for name in alphabet:
                for exponent in (1, -1):
                    if word.letters and word.letters[-1] == (name, -exponent):
                        continue
                    grown.append(FreeGroupWord(word.letters + ((name, exponent),)))
        words.extend(grown)
        frontier = grown
    return words
