import pytest
from hypothesis import given
from hypothesis import strategies as st

from seg17.codec import (
    DecodeCandidate,
    collision_report,
    decode_set,
    encode_number,
    encode_text,
)
from seg17.exceptions import UnmappableCharError, UnsupportedValueError
from seg17.segments import pack, unpack
from seg17.tables import Registry, ScriptTable, load_default


def test_encode_number_examples(registry):
    hindi = registry.lookup("hindi")
    [digit] = encode_number(hindi, [4])
    assert unpack(digit.word) == {"d1", "h", "j", "l", "m"}
    assert digit.script_id == 3

    assert encode_number(registry.lookup("english"), []) == []

    urdu = registry.lookup("urdu")
    words = [d.word for d in encode_number(urdu, [7, 8])]
    assert [unpack(w) for w in words] == [
        {"d2", "d1", "j", "m"},
        {"b", "c", "j", "m"},
    ]


def test_encode_number_preserves_order_and_length(registry):
    english = registry.lookup("english")
    values = [3, 1, 4, 1, 5, 9, 2, 6]
    encoded = encode_number(english, values)
    assert [d.value for d in encoded] == values
    assert len(encoded) == len(values)


def test_encode_number_unsupported_value(registry):
    english = registry.lookup("english")
    with pytest.raises(UnsupportedValueError) as err:
        encode_number(english, [1, 1000])
    assert err.value.position == 1


def test_encode_text_native_digits(registry):
    bengali = registry.lookup("bengali")
    [digit] = encode_text(bengali, "১")  # Bengali one
    assert digit.word == bengali.glyph(1)

    deva = registry.lookup("hindi")
    words = [d.word for d in encode_text(deva, "४२")]  # four, two
    assert words == [deva.glyph(4), deva.glyph(2)]

    tamil = registry.lookup("tamil")
    [thousand] = encode_text(tamil, "௲")
    assert thousand.value == 1000


def test_encode_text_ascii(registry):
    english = registry.lookup("english")
    words = [d.word for d in encode_text(english, "42")]
    assert words == [english.glyph(4), english.glyph(2)]
    # ASCII digits work for any script
    deva = registry.lookup("hindi")
    assert [d.word for d in encode_text(deva, "42")] == [deva.glyph(4), deva.glyph(2)]


def test_encode_text_unmappable(registry):
    english = registry.lookup("english")
    with pytest.raises(UnmappableCharError) as err:
        encode_text(english, "4x2")
    assert err.value.index == 1
    assert "U+0078" in str(err.value)


def test_encode_text_rejects_foreign_digits(registry):
    # a Bengali digit is not valid input for the Devanagari table
    with pytest.raises(UnmappableCharError) as err:
        encode_text(registry.lookup("hindi"), "२১")
    assert err.value.index == 1


def test_decode_examples(registry):
    english = registry.lookup("english")
    assert decode_set(registry, pack({"b", "c"}), english) == [DecodeCandidate(16, 1)]
    assert decode_set(registry, pack({"e", "f"})) == [
        DecodeCandidate(5, 1),
        DecodeCandidate(15, 1),
    ]
    assert decode_set(registry, 0) == []


def test_decode_round_trip_all_glyphs(registry):
    for table in registry.tables:
        for value in table.values():
            candidates = decode_set(registry, table.glyph(value), table)
            assert candidates == [DecodeCandidate(table.id, value)]
            assert DecodeCandidate(table.id, value) in decode_set(
                registry, table.glyph(value)
            )


def test_decode_all_equals_union_of_scopes(registry):
    words = sorted({t.glyphs[v] for t in registry.tables for v in t.values()})
    for word in words:
        merged = []
        for table in registry.tables:
            merged.extend(decode_set(registry, word, table))
        assert decode_set(registry, word) == sorted(merged)


def brute_force_groups(registry):
    groups = {}
    for table in registry.tables:
        for value in table.values():
            groups.setdefault(table.glyph(value), []).append(
                DecodeCandidate(table.id, value)
            )
    return {w: sorted(c) for w, c in groups.items() if len(c) >= 2}


def test_collision_report_matches_brute_force(registry):
    report = collision_report(registry)
    oracle = brute_force_groups(registry)
    assert dict(report) == oracle
    assert [w for w, _ in report] == sorted(oracle)


def test_collision_report_anchors(registry):
    report = dict(collision_report(registry))
    four = report[pack({"d1", "h", "j", "l", "m"})]
    for key in ("dogri", "gujarati", "devanagari", "sindhi"):
        assert DecodeCandidate(registry.lookup(key).id, 4) in four
    assert len(four) >= 4

    eight = report[pack({"d2", "d1", "j", "m"})]
    assert DecodeCandidate(registry.lookup("gujarati").id, 8) in eight
    assert DecodeCandidate(registry.lookup("devanagari").id, 8) in eight
    assert DecodeCandidate(registry.lookup("sindhi").id, 8) in eight
    assert DecodeCandidate(registry.lookup("urdu").id, 7) in eight


def test_collision_report_unique_rows_empty():
    glyphs = {v: 1 << v for v in range(10)}  # ten distinct words
    table = ScriptTable(0, "demo", "Demo", ("Demo",), glyphs, None)
    assert collision_report(Registry((table,))) == []


@given(st.lists(st.integers(min_value=0, max_value=9), max_size=12))
def test_encode_output_length_property(values):
    english = load_default().lookup("english")
    assert len(encode_number(english, values)) == len(values)
