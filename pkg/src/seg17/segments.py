"""Core definitions for the 17-segment display cell.

The cell is the classic 16-segment arrangement (split top, middle and
bottom horizontals, four outer verticals, two center verticals, four
diagonals) plus one extra stroke ``p`` across the lower-left quarter.
Patterns travel in two interchangeable forms: a plain set of segment
names, and a packed 17-bit word with one bit per segment in canonical
order (``a1`` = bit 0 ... ``p`` = bit 16).

Only the integer value of a packed word is meaningful; byte layout is
left to the emitters that need one.
"""

from __future__ import annotations

from collections.abc import Iterable

from .exceptions import SegmentNameError, WordRangeError

#: Canonical bit order: bit k of a packed word lights SEGMENT_NAMES[k].
SEGMENT_NAMES: tuple[str, ...] = (
    "a1", "a2", "b", "c", "d1", "d2", "e", "f",
    "g1", "g2", "h", "i", "j", "k", "l", "m", "p",
)

SEGMENT_COUNT = len(SEGMENT_NAMES)
FULL_WORD = (1 << SEGMENT_COUNT) - 1  # 0x1FFFF, every segment lit

_INDEX = {name: k for k, name in enumerate(SEGMENT_NAMES)}
_BIT = {name: 1 << k for k, name in enumerate(SEGMENT_NAMES)}


def segment_index(name: str) -> int:
    """Canonical bit position of a segment name (a1=0 ... p=16)."""
    try:
        return _INDEX[name]
    except KeyError:
        raise SegmentNameError(name) from None


def parse_segment_name(token: str) -> str:
    """Normalize one segment token, case-insensitively, ignoring whitespace."""
    name = token.strip().lower()
    if name not in _INDEX:
        raise SegmentNameError(token.strip())
    return name


def parse_segment_list(text: str) -> set[str]:
    """Parse a comma-separated segment list such as ``a1,a2,b,c``."""
    return {parse_segment_name(t) for t in text.split(",") if t.strip()}


def pack(segments: Iterable[str]) -> int:
    """Pack segment names into a 17-bit word."""
    word = 0
    for name in segments:
        try:
            word |= _BIT[name]
        except KeyError:
            raise SegmentNameError(name) from None
    return word


def unpack(word: int) -> set[str]:
    """Set of segment names lit in a packed word."""
    if not 0 <= word <= FULL_WORD:
        raise WordRangeError(word)
    return {name for name, bit in _BIT.items() if word & bit}


def format_segments(word: int) -> str:
    """Packed word as the canonical comma-separated name list."""
    if not 0 <= word <= FULL_WORD:
        raise WordRangeError(word)
    return ",".join(name for name, bit in _BIT.items() if word & bit)


def word_hex(word: int) -> str:
    """Packed word as ``0x`` plus five upper-case hex digits."""
    return f"0x{word:05X}"


def parse_word(text: str) -> int:
    """Parse a packed word written in hex, with or without ``0x``."""
    word = int(text.strip(), 16)
    if not 0 <= word <= FULL_WORD:
        raise WordRangeError(word)
    return word
