"""Two-level decoder synthesis for the segment tables.

The full decoder takes 9 input bits, a 5-bit script id (s4..s0) and a
4-bit digit code (v3..v0), and drives the 17 segment lines.  Digit codes
0..9 are the digits; codes 10/11/12 stand for the values 10/100/1000
(only Tamil defines them).  Input points are indexed (script << 4) |
code, so the space has 512 points of which only the 173 defined glyphs
are care points; everything else is don't-care and free fuel for
minimization.

Each output is minimized independently: Quine-McCluskey prime implicant
generation over onset plus don't-cares, essential-prime extraction, then
either Petrick's method (exact, while the cyclic core stays at or below
20 primes and 24 uncovered minterms) or a deterministic greedy cover.
verify_cover is the deliberately dumb referee: it evaluates a cover
point by point with no minimization logic, and everything else is tested
against it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .segments import SEGMENT_NAMES
from .tables import Registry, ScriptTable, VALUE_TO_CODE

SCRIPT_BITS = 5
VALUE_BITS = 4
FULL_INPUT_NAMES = ("s4", "s3", "s2", "s1", "s0", "v3", "v2", "v1", "v0")
CODE_INPUT_NAMES = ("v3", "v2", "v1", "v0")


@dataclass(frozen=True)
class Implicant:
    """A product term: fixed bits in ``value``, wildcards in ``mask``."""

    value: int
    mask: int

    def __post_init__(self):
        if self.value & self.mask:
            raise ValueError("implicant value overlaps its wildcard mask")

    def covers(self, point: int) -> bool:
        return point & ~self.mask == self.value

    def literal_count(self, width: int) -> int:
        return width - self.mask.bit_count()


@dataclass(frozen=True)
class Cover:
    """A sum-of-products cover for one output line."""

    output: int
    implicants: tuple[Implicant, ...]
    literal_count: int

    def evaluate(self, point: int) -> bool:
        return any(imp.covers(point) for imp in self.implicants)


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of exhaustively checking a cover against its table."""

    equivalent: bool
    counterexample: tuple[int, int, int] | None = None  # point, expected, got


@dataclass(frozen=True)
class TruthTable:
    """Per-output onset/offset/don't-care partition of the input space."""

    width: int
    input_names: tuple[str, ...]
    output_names: tuple[str, ...]
    onset: tuple[frozenset[int], ...]
    offset: tuple[frozenset[int], ...]
    dc: tuple[frozenset[int], ...]
    name: str = "all"

    def __post_init__(self):
        space = frozenset(range(1 << self.width))
        for k in range(len(self.output_names)):
            on, off, dc = self.onset[k], self.offset[k], self.dc[k]
            if on | off | dc != space or on & off or on & dc or off & dc:
                raise ValueError(f"output {k}: onset/offset/dc must partition the space")

    @property
    def point_count(self) -> int:
        return 1 << self.width

    def care_points(self) -> list[int]:
        return sorted(self.onset[0] | self.offset[0])


def point_index(script_id: int, code: int) -> int:
    return (script_id << VALUE_BITS) | code


def build_truth_table(registry: Registry, script: ScriptTable | None = None) -> TruthTable:
    """Decoder truth table for a registry, or for one script alone.

    The single-script variant drops the script-select bits and leaves a
    4-bit code decoder (care points are just that script's values).
    """
    if script is not None:
        width = VALUE_BITS
        names = CODE_INPUT_NAMES
        care = {VALUE_TO_CODE[v]: script.glyphs[v] for v in script.values()}
        label = script.key
    else:
        width = SCRIPT_BITS + VALUE_BITS
        names = FULL_INPUT_NAMES
        care = {
            point_index(t.id, VALUE_TO_CODE[v]): t.glyphs[v]
            for t in registry.tables
            for v in t.values()
        }
        label = "all"

    space = frozenset(range(1 << width))
    dc_points = frozenset(space - set(care))
    onset, offset, dc = [], [], []
    for index in range(len(SEGMENT_NAMES)):
        on = frozenset(p for p, word in care.items() if word >> index & 1)
        off = frozenset(p for p, word in care.items() if not word >> index & 1)
        onset.append(on)
        offset.append(off)
        dc.append(dc_points)
    return TruthTable(
        width=width,
        input_names=names,
        output_names=SEGMENT_NAMES,
        onset=tuple(onset),
        offset=tuple(offset),
        dc=tuple(dc),
        name=label,
    )


def _prime_implicants(width: int, minterms: frozenset[int]) -> list[Implicant]:
    """All prime implicants of the given minterm set (classic QM merge)."""
    current: set[tuple[int, int]] = {(m, 0) for m in minterms}
    primes: set[tuple[int, int]] = set()
    while current:
        groups: dict[tuple[int, int], list[int]] = {}
        for value, mask in current:
            groups.setdefault((mask, value.bit_count()), []).append(value)
        merged: set[tuple[int, int]] = set()
        next_level: set[tuple[int, int]] = set()
        for (mask, ones), values in groups.items():
            uppers = groups.get((mask, ones + 1), ())
            for a in values:
                for b in uppers:
                    diff = a ^ b
                    if diff.bit_count() == 1:
                        merged.add((a, mask))
                        merged.add((b, mask))
                        next_level.add((a & ~diff, mask | diff))
        primes |= current - merged
        current = next_level
    return [Implicant(v, m) for v, m in sorted(primes)]


def _petrick(
    chart: dict[int, tuple[int, ...]], primes: list[Implicant], width: int
) -> list[int]:
    """Exact minimum cover of the chart (minterm -> candidate prime ids).

    Product-of-sums expansion with absorption; the winner is the fewest
    implicants, then the fewest literals, then lexicographic order.
    """
    terms: set[frozenset[int]] = {frozenset()}
    for minterm in sorted(chart):
        choices = chart[minterm]
        expanded = {term | {p} for term in terms for p in choices}
        # absorption: drop any term that is a superset of another
        kept: set[frozenset[int]] = set()
        for term in sorted(expanded, key=len):
            if not any(other <= term for other in kept):
                kept.add(term)
        terms = kept

    def cost(term: frozenset[int]) -> tuple:
        literals = sum(primes[p].literal_count(width) for p in term)
        return (len(term), literals, tuple(sorted((primes[p].value, primes[p].mask) for p in term)))

    return sorted(min(terms, key=cost))


def _greedy(
    chart: dict[int, tuple[int, ...]], primes: list[Implicant], width: int
) -> list[int]:
    """Largest-coverage greedy cover; ties by fewer literals, then order."""
    uncovered = set(chart)
    chosen: list[int] = []
    cover_sets: dict[int, set[int]] = {}
    for minterm, choices in chart.items():
        for p in choices:
            cover_sets.setdefault(p, set()).add(minterm)
    while uncovered:
        best = min(
            cover_sets,
            key=lambda p: (
                -len(cover_sets[p] & uncovered),
                primes[p].literal_count(width),
                (primes[p].value, primes[p].mask),
            ),
        )
        chosen.append(best)
        uncovered -= cover_sets[best]
        del cover_sets[best]
    return sorted(chosen)


PETRICK_MAX_PRIMES = 20
PETRICK_MAX_MINTERMS = 24


def minimize(table: TruthTable, output: int) -> Cover:
    """Minimized two-level cover for one output line."""
    onset = table.onset[output]
    if not onset:
        return Cover(output, (), 0)
    primes = _prime_implicants(table.width, frozenset(onset | table.dc[output]))
    # keep only primes that earn their place by covering real onset points
    useful = [p for p in primes if any(p.covers(m) for m in onset)]

    chart: dict[int, list[int]] = {
        m: [i for i, p in enumerate(useful) if p.covers(m)] for m in sorted(onset)
    }
    chosen: set[int] = set()
    # iterated essential selection: a minterm with a single candidate
    # forces that prime, which may in turn make others essential
    changed = True
    while changed:
        changed = False
        for minterm, choices in list(chart.items()):
            if any(c in chosen for c in choices):
                del chart[minterm]
                changed = True
            elif len(choices) == 1:
                chosen.add(choices[0])
                del chart[minterm]
                changed = True

    if chart:
        core_primes = {c for choices in chart.values() for c in choices}
        residual = {m: tuple(choices) for m, choices in chart.items()}
        if len(core_primes) <= PETRICK_MAX_PRIMES and len(residual) <= PETRICK_MAX_MINTERMS:
            chosen.update(_petrick(residual, useful, table.width))
        else:
            chosen.update(_greedy(residual, useful, table.width))

    implicants = tuple(sorted((useful[i] for i in chosen), key=lambda p: (p.value, p.mask)))
    literals = sum(p.literal_count(table.width) for p in implicants)
    return Cover(output, implicants, literals)


def synthesize(table: TruthTable) -> list[Cover]:
    """Minimize every output line of the table."""
    return [minimize(table, k) for k in range(len(table.output_names))]


def verify_cover(cover: Cover, table: TruthTable) -> EquivalenceReport:
    """Exhaustive referee: cover must be 1 on onset, 0 on offset.

    Straight evaluation over every input point, lowest point first; no
    shared machinery with minimize beyond Implicant.covers.
    """
    onset = table.onset[cover.output]
    offset = table.offset[cover.output]
    for point in range(table.point_count):
        got = cover.evaluate(point)
        if point in onset and not got:
            return EquivalenceReport(False, (point, 1, 0))
        if point in offset and got:
            return EquivalenceReport(False, (point, 0, 1))
    return EquivalenceReport(True)


def _term_text(imp: Implicant, table: TruthTable, hdl: bool) -> str:
    lits = []
    for i, name in enumerate(table.input_names):
        bit = table.width - 1 - i
        if imp.mask >> bit & 1:
            continue
        if imp.value >> bit & 1:
            lits.append(name)
        else:
            lits.append("~" + name if hdl else name + "'")
    return (" & " if hdl else "&").join(lits)


def emit_sop(table: TruthTable, covers: list[Cover]) -> str:
    """One line per output: ``<seg> = <product> + <product> ...``.

    Literals are the input names; a trailing prime marks negation.
    Constant lines read ``<seg> = 0`` or ``<seg> = 1``.
    """
    full_mask = (1 << table.width) - 1
    lines = []
    for cover in covers:
        name = table.output_names[cover.output]
        if not cover.implicants:
            lines.append(f"{name} = 0")
        elif any(imp.mask == full_mask for imp in cover.implicants):
            lines.append(f"{name} = 1")
        else:
            terms = [_term_text(imp, table, hdl=False) for imp in cover.implicants]
            lines.append(f"{name} = " + " + ".join(terms))
    return "\n".join(lines) + "\n"


def emit_hdl(table: TruthTable, covers: list[Cover], module_name: str | None = None) -> str:
    """Self-contained structural Verilog mirroring emit_sop."""
    if module_name is None:
        suffix = "" if table.name == "all" else f"_{table.name}"
        module_name = f"seg17{suffix}_decoder"
    full_mask = (1 << table.width) - 1
    lines = [
        f"// {len(table.input_names)}-input, {len(table.output_names)}-output "
        "combinational segment decoder",
        f"module {module_name} (",
        f"    input  wire {', '.join(table.input_names)},",
        f"    output wire {', '.join(table.output_names)}",
        ");",
        "",
    ]
    for cover in covers:
        name = table.output_names[cover.output]
        if not cover.implicants:
            expr = "1'b0"
        elif any(imp.mask == full_mask for imp in cover.implicants):
            expr = "1'b1"
        else:
            terms = ["(" + _term_text(imp, table, hdl=True) + ")" for imp in cover.implicants]
            expr = " | ".join(terms)
        lines.append(f"assign {name} = {expr};")
    lines += ["", "endmodule", ""]
    return "\n".join(lines)


def emit_lut(registry: Registry, script: ScriptTable | None = None) -> bytes:
    """Raw lookup table: 3 bytes per input point, word little-end first.

    Full decoder: 512 entries (1536 bytes) indexed (script << 4) | code.
    Single-script decoder: 16 entries over the digit code alone.
    Don't-care points emit zero.
    """
    if script is not None:
        words = {VALUE_TO_CODE[v]: script.glyphs[v] for v in script.values()}
        size = 1 << VALUE_BITS
    else:
        words = {
            point_index(t.id, VALUE_TO_CODE[v]): t.glyphs[v]
            for t in registry.tables
            for v in t.values()
        }
        size = 1 << (SCRIPT_BITS + VALUE_BITS)
    return b"".join(words.get(point, 0).to_bytes(3, "little") for point in range(size))
