"""Free racks and free quandles on named generators, element by element."""

from rackhom.free.elements import (
    FreeElement,
    FreeQuandleElement,
    FreeRackElement,
    as_group_word,
    extend_map,
    format_element,
    fq_canonicalize,
    fq_op,
    fr_inverse_op,
    fr_op,
    generator,
    parse_element,
    random_element,
    reduced_words,
)
from rackhom.free.words import (
    EMPTY_WORD,
    FreeGroupWord,
    fg_concat,
    fg_inverse,
    fg_reduce,
    format_word,
    parse_word,
    random_word,
)

__all__ = [
    "EMPTY_WORD",
    "FreeElement",
    "FreeGroupWord",
    "FreeQuandleElement",
    "FreeRackElement",
    "as_group_word",
    "extend_map",
    "fg_concat",
    "fg_inverse",
    "fg_reduce",
    "format_element",
    "format_word",
    "fq_canonicalize",
    "fq_op",
    "fr_inverse_op",
    "fr_op",
    "generator",
    "parse_element",
    "parse_word",
    "random_element",
    "random_word",
    "reduced_words",
]
