"""Digit/text encoding to segment words, and exact-match reverse lookup.

Decoding is exact: a pattern either is some script's digit or it is not.
Several scripts share patterns (twelve tables draw the same full-oval
zero, for instance), so reverse lookup returns every candidate and
collision_report enumerates all shared patterns up front.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .exceptions import UnmappableCharError, UnsupportedValueError, WordRangeError
from .segments import FULL_WORD
from .tables import Registry, ScriptTable


@dataclass(frozen=True)
class EncodedDigit:
    """One digit value rendered into a script's packed segment word."""

    value: int
    word: int
    script_id: int


@dataclass(frozen=True, order=True)
class DecodeCandidate:
    """One (script, value) pair whose glyph equals a queried pattern."""

    script_id: int
    value: int


def encode_number(script: ScriptTable, values: Sequence[int]) -> list[EncodedDigit]:
    """Encode a sequence of digit values, preserving order.

    Values are encoded independently; Tamil's 10/100/1000 are standalone
    glyph values, not positional expansions.
    """
    out = []
    for position, value in enumerate(values):
        if not script.supports(value):
            raise UnsupportedValueError(script.key, value, position=position)
        out.append(EncodedDigit(value, script.glyphs[value], script.id))
    return out


def encode_text(script: ScriptTable, text: str) -> list[EncodedDigit]:
    """Encode a digit string, accepting ASCII digits or the script's own.

    Mixing scripts is rejected: a character must be ASCII or native to
    the given script, never borrowed from another table.
    """
    native = script.char_map
    values = []
    for index, char in enumerate(text):
        if "0" <= char <= "9":
            value = ord(char) - ord("0")
        elif char in native:
            value = native[char]
        else:
            raise UnmappableCharError(char, index)
        if not script.supports(value):
            raise UnsupportedValueError(script.key, value, position=index)
        values.append(value)
    return encode_number(script, values)


def decode_set(
    registry: Registry, word: int, scope: ScriptTable | None = None
) -> list[DecodeCandidate]:
    """All (script, value) pairs whose glyph equals ``word`` exactly.

    ``scope=None`` searches every table.  Candidates come back ordered
    by (script id, value); no match yields an empty list.
    """
    if not 0 <= word <= FULL_WORD:
        raise WordRangeError(word)
    tables: Iterable[ScriptTable]
    tables = registry.tables if scope is None else (scope,)
    return [
        DecodeCandidate(table.id, value)
        for table in tables
        for value in table.values()
        if table.glyphs[value] == word
    ]


def collision_report(
    registry: Registry,
) -> list[tuple[int, list[DecodeCandidate]]]:
    """Every packed word matched by two or more glyphs across the registry.

    Returns (word, candidates) pairs ordered by word ascending, with the
    candidates ordered by (script id, value).
    """
    groups: dict[int, list[DecodeCandidate]] = {}
    for table in registry.tables:
        for value in table.values():
            groups.setdefault(table.glyphs[value], []).append(
                DecodeCandidate(table.id, value)
            )
    return [
        (word, sorted(groups[word]))
        for word in sorted(groups)
        if len(groups[word]) >= 2
    ]
