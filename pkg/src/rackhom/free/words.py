"""Reduced words in a free group on named generators.

Word syntax is whitespace separated generator names with a trailing
apostrophe for inverses, e.g. ``a b' a``. The empty word is written ``1``
(or the empty string).
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Letter = tuple[str, int]

_NAME = re.compile(r"^[a-z][a-z0-9_]*$")


@dataclass(frozen=True)
class FreeGroupWord:
    """A freely reduced word; construct through :func:`fg_reduce`."""

    letters: tuple[Letter, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def is_reduced(self) -> bool:
        return all(
            not (g == h and e == -f)
            for (g, e), (h, f) in zip(self.letters, self.letters[1:])
        )


EMPTY_WORD = FreeGroupWord()


def fg_reduce(letters: Iterable[Letter]) -> FreeGroupWord:
    """Freely reduce a raw letter sequence (single left-to-right stack pass)."""
    stack: list[Letter] = []
    for generator, exponent in letters:
        if exponent not in (1, -1):
            raise ValueError(f"Letter exponent must be ±1, got {exponent}")
        if stack and stack[-1] == (generator, -exponent):
            stack.pop()
        else:
            stack.append((generator, exponent))
    return FreeGroupWord(tuple(stack))


def fg_inverse(word: FreeGroupWord) -> FreeGroupWord:
    return FreeGroupWord(tuple((g, -e) for g, e in reversed(word.letters)))


def fg_concat(*words: FreeGroupWord) -> FreeGroupWord:
    return fg_reduce(letter for word in words for letter in word.letters)


def parse_word(text: str) -> FreeGroupWord:
    """Parse ``a b' a`` into a reduced word."""
    letters: list[Letter] = []
    for token in text.split():
        if token == "1":
            continue
        name, exponent = (token[:-1], -1) if token.endswith("'") else (token, 1)
        if not _NAME.match(name):
            raise ValueError(f"Invalid generator token: {token!r}")
        letters.append((name, exponent))
    return fg_reduce(letters)


def format_word(word: FreeGroupWord) -> str:
    if not word.letters:
        return "1"
    return " ".join(g if e == 1 else f"{g}'" for g, e in word.letters)


def random_word(rng: random.Random, alphabet: Sequence[str], max_length: int) -> FreeGroupWord:
    """Reduced word of length at most ``max_length`` over ``alphabet``."""
    raw = [
        (rng.choice(alphabet), rng.choice((1, -1)))
        for _ in range(rng.randint(0, max_length))
    ]
    return fg_reduce(raw)
