"""Error types shared by the toolkit, the CLI, and the HTTP service."""

from __future__ import annotations

from collections.abc import Sequence


class Seg17Error(Exception):
    """Base class for every domain error raised by this package."""


class SegmentNameError(Seg17Error):
    """A token is not one of the 17 segment names."""

    def __init__(self, token: str):
        super().__init__(
            f"unknown segment name {token!r} "
            "(valid: a1,a2,b,c,d1,d2,e,f,g1,g2,h,i,j,k,l,m,p)"
        )
        self.token = token


class WordRangeError(Seg17Error):
    """A packed segment word does not fit in 17 bits."""

    def __init__(self, word: int):
        super().__init__(f"segment word {word:#x} out of range (must be below 0x20000)")
        self.word = word


class UnknownScriptError(Seg17Error):
    """A script name matched neither a table key nor a language alias."""

    def __init__(self, name: str, valid: Sequence[str]):
        super().__init__(f"unknown script {name!r}; valid names: {', '.join(valid)}")
        self.name = name
        self.valid = tuple(valid)


class UnsupportedValueError(Seg17Error):
    """A digit value has no glyph in the chosen script table."""

    def __init__(self, script: str, value: int, position: int | None = None):
        at = "" if position is None else f" (position {position})"
        super().__init__(f"script {script!r} has no glyph for value {value}{at}")
        self.script = script
        self.value = value
        self.position = position


class UnmappableCharError(Seg17Error):
    """A text character is neither an ASCII digit nor a native digit."""

    def __init__(self, char: str, index: int):
        super().__init__(
            f"cannot map character {char!r} (U+{ord(char):04X}) at index {index}"
        )
        self.char = char
        self.index = index


class TableFormatError(Seg17Error):
    """A SEGTAB/1 document could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        where = "" if line is None else f"line {line}: "
        super().__init__(where + message)
        self.line = line


class TableValidationError(Seg17Error):
    """A parsed registry violates a structural invariant."""

    def __init__(self, errors: Sequence[str]):
        super().__init__("invalid glyph tables: " + "; ".join(errors))
        self.errors = tuple(errors)


class RenderError(Seg17Error):
    """Rendering was asked to do something impossible."""


class SimulationError(Seg17Error):
    """A display driver configuration violates its invariants."""
