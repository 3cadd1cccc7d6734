"""seg17: a 17-segment numeric display toolkit.

Encodes the digits of the 22 scheduled languages of India plus English
into 17-bit segment words, renders them as SVG or terminal art,
synthesizes minimized decoder logic, and simulates a multiplexed display
driver.
"""

from .codec import (
    DecodeCandidate,
    EncodedDigit,
    collision_report,
    decode_set,
    encode_number,
    encode_text,
)
from .exceptions import (
    RenderError,
    Seg17Error,
    SegmentNameError,
    SimulationError,
    TableFormatError,
    TableValidationError,
    UnknownScriptError,
    UnmappableCharError,
    UnsupportedValueError,
    WordRangeError,
)
from .render import GeometrySpec, RenderStyle, geometry, render_svg, render_terminal
from .segments import (
    FULL_WORD,
    SEGMENT_COUNT,
    SEGMENT_NAMES,
    format_segments,
    pack,
    parse_segment_list,
    parse_segment_name,
    parse_word,
    segment_index,
    unpack,
    word_hex,
)
from .simulate import (
    DisplayConfig,
    FrameTrace,
    TickRecord,
    duty_cycle,
    run_simulation,
    trace_to_csv,
)
from .synth import (
    Cover,
    EquivalenceReport,
    Implicant,
    TruthTable,
    build_truth_table,
    emit_hdl,
    emit_lut,
    emit_sop,
    minimize,
    synthesize,
    verify_cover,
)
from .tables import (
    Registry,
    ScriptTable,
    ValidationReport,
    emit_tables,
    load_default,
    load_tables,
    validate_registry,
)

__version__ = "0.1.0"
