"""Glyph tables: digit patterns for seventeen scripts covering the 22
scheduled languages of India plus English.

Tables are carried in the SEGTAB/1 text format (UTF-8, line oriented):

    SEGTAB/1
    script <id> <key> "<display name>" langs=<Name,Name,...> zero=U+XXXX|none
    glyph <value> <seg,seg,...>

Blank lines and full-line ``#`` comments are ignored.  Glyph rows attach
to the script header above them.  Segment lists may name segments in any
order; the loader normalizes them to sets, and the emitter writes them
back in canonical order, so a canonical file round-trips byte for byte.

Every table covers digit values 0..9.  A table may additionally carry
the values 10, 100 and 1000 (Tamil has dedicated glyphs for these); no
other values are accepted.
"""

from __future__ import annotations

import shlex
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from importlib import resources

from .exceptions import (
    SegmentNameError,
    TableFormatError,
    TableValidationError,
    UnknownScriptError,
    UnsupportedValueError,
)
from .segments import (
    FULL_WORD,
    format_segments,
    pack,
    parse_segment_list,
    unpack,
    word_hex,
)

#: Digit values every table must cover.
BASE_VALUES: tuple[int, ...] = tuple(range(10))
#: Extension values and their 4-bit decoder codes (codes 0..9 are the digits).
EXTENSION_CODES: dict[int, int] = {10: 10, 100: 11, 1000: 12}
VALUE_TO_CODE: dict[int, int] = {**{v: v for v in BASE_VALUES}, **EXTENSION_CODES}
CODE_TO_VALUE: dict[int, int] = {c: v for v, c in VALUE_TO_CODE.items()}

_DATA_FILE = "numerals.segtab"


@dataclass(frozen=True)
class ScriptTable:
    """One script's digit-to-pattern mapping plus its language aliases."""

    id: int
    key: str
    display_name: str
    languages: tuple[str, ...]
    glyphs: dict[int, int]  # digit value -> packed 17-bit word
    codepoint_base: int | None = None  # Unicode codepoint of the native zero

    def supports(self, value: int) -> bool:
        return value in self.glyphs

    def glyph(self, value: int) -> int:
        """Packed word for one digit value."""
        try:
            return self.glyphs[value]
        except KeyError:
            raise UnsupportedValueError(self.key, value) from None

    def values(self) -> list[int]:
        return sorted(self.glyphs)

    def segment_names(self, value: int) -> set[str]:
        return unpack(self.glyph(value))

    @cached_property
    def char_map(self) -> dict[str, int]:
        """Native digit characters accepted for this script in text input."""
        if self.codepoint_base is None:
            return {}
        return {
            chr(self.codepoint_base + VALUE_TO_CODE[v]): v
            for v in self.glyphs
            if v in VALUE_TO_CODE
        }


@dataclass(frozen=True)
class ValidationReport:
    """Structural errors and duplicate-pattern warnings for a registry."""

    errors: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors


@dataclass(frozen=True)
class Registry:
    """An immutable collection of script tables with alias resolution."""

    tables: tuple[ScriptTable, ...]
    _aliases: dict[str, int] = field(init=False, compare=False, repr=False)
    _by_id: dict[int, ScriptTable] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        aliases: dict[str, int] = {}
        by_id: dict[int, ScriptTable] = {}
        for table in self.tables:
            by_id.setdefault(table.id, table)
            aliases.setdefault(table.key.lower(), table.id)
            for lang in table.languages:
                aliases.setdefault(lang.lower(), table.id)
        object.__setattr__(self, "_aliases", aliases)
        object.__setattr__(self, "_by_id", by_id)

    def lookup(self, name: str) -> ScriptTable:
        """Resolve a table key or language alias, case-insensitively."""
        table_id = self._aliases.get(name.strip().lower())
        if table_id is None:
            raise UnknownScriptError(name, self.valid_names())
        return self._by_id[table_id]

    def get(self, table_id: int) -> ScriptTable:
        try:
            return self._by_id[table_id]
        except KeyError:
            raise UnknownScriptError(str(table_id), self.valid_names()) from None

    def valid_names(self) -> list[str]:
        return sorted(self._aliases)

    def languages(self) -> list[str]:
        return sorted({lang for t in self.tables for lang in t.languages})

    @property
    def glyph_count(self) -> int:
        return sum(len(t.glyphs) for t in self.tables)


def parse_tables(text: str) -> Registry:
    """Parse a SEGTAB/1 document without structural validation."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != "SEGTAB/1":
        raise TableFormatError("missing SEGTAB/1 signature", line=1)

    tables: list[ScriptTable] = []
    header: tuple[int, str, str, tuple[str, ...], int | None] | None = None
    glyphs: dict[int, int] = {}

    def flush():
        nonlocal header, glyphs
        if header is not None:
            tid, key, display, langs, zero = header
            tables.append(ScriptTable(tid, key, display, langs, glyphs, zero))
        header, glyphs = None, {}

    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = shlex.split(line)
        if fields[0] == "script":
            flush()
            header = _parse_script_header(fields, lineno)
        elif fields[0] == "glyph":
            if header is None:
                raise TableFormatError("glyph row outside a script block", lineno)
            value, word = _parse_glyph_row(fields, lineno)
            if value in glyphs:
                raise TableFormatError(f"duplicate glyph value {value}", lineno)
            glyphs[value] = word
        else:
            raise TableFormatError(f"unrecognized directive {fields[0]!r}", lineno)
    flush()

    if not tables:
        raise TableFormatError("no script tables in file")
    return Registry(tuple(tables))


def _parse_script_header(fields, lineno):
    if len(fields) != 6:
        raise TableFormatError(
            'script header needs: script <id> <key> "<display name>" '
            "langs=<...> zero=<U+XXXX|none>",
            lineno,
        )
    _, raw_id, key, display, langs_field, zero_field = fields
    try:
        table_id = int(raw_id)
    except ValueError:
        raise TableFormatError(f"script id {raw_id!r} is not an integer", lineno) from None
    if not langs_field.startswith("langs="):
        raise TableFormatError("expected langs=<Name,Name,...>", lineno)
    langs = tuple(n.strip() for n in langs_field[6:].split(",") if n.strip())
    if not langs:
        raise TableFormatError("langs= list is empty", lineno)
    if not zero_field.startswith("zero="):
        raise TableFormatError("expected zero=U+XXXX or zero=none", lineno)
    zero_text = zero_field[5:]
    if zero_text == "none":
        zero = None
    elif zero_text.startswith("U+"):
        try:
            zero = int(zero_text[2:], 16)
        except ValueError:
            raise TableFormatError(f"bad codepoint {zero_text!r}", lineno) from None
    else:
        raise TableFormatError(f"bad codepoint {zero_text!r}", lineno)
    return table_id, key.lower(), display, langs, zero


def _parse_glyph_row(fields, lineno):
    if len(fields) != 3:
        raise TableFormatError("glyph row needs: glyph <value> <seg,seg,...>", lineno)
    try:
        value = int(fields[1])
    except ValueError:
        raise TableFormatError(f"glyph value {fields[1]!r} is not an integer", lineno) from None
    try:
        word = pack(parse_segment_list(fields[2]))
    except SegmentNameError as exc:
        raise TableFormatError(str(exc), lineno) from None
    return value, word


def validate_registry(registry: Registry) -> ValidationReport:
    """Structural scan: coverage errors plus duplicate-pattern warnings.

    Errors reject a registry; warnings surface ambiguity (two digits that
    light the same segments) without hiding it.  Findings are emitted in
    a fixed order so reports are byte-stable.
    """
    errors: list[str] = []
    warnings: list[str] = []

    seen_ids: set[int] = set()
    seen_keys: set[str] = set()
    seen_aliases: dict[str, str] = {}
    for table in registry.tables:
        if table.id in seen_ids:
            errors.append(f"duplicate table id {table.id}")
        seen_ids.add(table.id)
        if table.key in seen_keys:
            errors.append(f"duplicate table key {table.key!r}")
        seen_keys.add(table.key)
        for lang in table.languages:
            owner = seen_aliases.setdefault(lang.lower(), table.key)
            if owner != table.key:
                errors.append(
                    f"language {lang!r} claimed by both {owner!r} and {table.key!r}"
                )

        values = set(table.glyphs)
        missing = set(BASE_VALUES) - values
        if missing:
            errors.append(
                f"table {table.key!r}: incomplete digit coverage "
                f"(missing {sorted(missing)})"
            )
        extras = values - set(BASE_VALUES)
        bad = extras - set(EXTENSION_CODES)
        if bad:
            errors.append(f"table {table.key!r}: unsupported values {sorted(bad)}")
        if extras and not bad and extras != set(EXTENSION_CODES):
            errors.append(
                f"table {table.key!r}: partial extension coverage {sorted(extras)}"
            )
        for value in table.values():
            word = table.glyphs[value]
            if word == 0:
                errors.append(f"table {table.key!r}: empty pattern for value {value}")
            elif not 0 < word <= FULL_WORD:
                errors.append(f"table {table.key!r}: pattern out of range for value {value}")

    # Duplicate patterns, within one table and across tables.
    by_word: dict[int, list[tuple[int, int]]] = {}
    for table in registry.tables:
        for value in table.values():
            by_word.setdefault(table.glyphs[value], []).append((table.id, value))
    for word in sorted(by_word):
        entries = by_word[word]
        if len(entries) < 2:
            continue
        names = ", ".join(
            f"{registry.get(tid).key} {value}" for tid, value in sorted(entries)
        )
        ids = {tid for tid, _ in entries}
        kind = "within-table duplicate" if len(ids) == 1 else "cross-table collision"
        warnings.append(f"{kind}: pattern {word_hex(word)} shared by {names}")

    return ValidationReport(tuple(errors), tuple(warnings))


def load_tables(text: str) -> Registry:
    """Parse and validate a SEGTAB/1 document; reject any registry with errors."""
    registry = parse_tables(text)
    report = validate_registry(registry)
    if not report.ok:
        raise TableValidationError(report.errors)
    return registry


@lru_cache(maxsize=1)
def load_default() -> Registry:
    """The embedded canonical tables (17 scripts, 173 glyphs)."""
    return load_tables(default_table_text())


def default_table_text() -> str:
    return (
        resources.files(__package__)
        .joinpath(f"data/{_DATA_FILE}")
        .read_text(encoding="utf-8")
    )


def emit_tables(registry: Registry) -> str:
    """Serialize a registry to canonical SEGTAB/1 text.

    Canonical means: tables in listed order, glyph values ascending,
    segment lists in canonical segment order, one blank line between
    blocks.  load_tables(emit_tables(r)) == r for any valid registry.
    """
    out = ["SEGTAB/1"]
    for table in registry.tables:
        zero = "none" if table.codepoint_base is None else f"U+{table.codepoint_base:04X}"
        out.append("")
        out.append(
            f'script {table.id} {table.key} "{table.display_name}" '
            f"langs={','.join(table.languages)} zero={zero}"
        )
        for value in table.values():
            out.append(f"glyph {value} {format_segments(table.glyphs[value])}")
    return "\n".join(out) + "\n"
