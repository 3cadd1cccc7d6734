"""Command-line front end; a thin client over the core package.

Exit codes: 0 success, 1 domain error (unknown script, unsupported
value, ...), 2 usage error, 3 data-file parse/validation error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .codec import decode_set, encode_number, encode_text
from .exceptions import Seg17Error, TableFormatError, TableValidationError
from .render import RenderStyle, render_svg, render_terminal
from .segments import format_segments, parse_segment_list, pack, parse_word, word_hex
from .simulate import DisplayConfig, run_simulation, trace_to_csv
from .synth import build_truth_table, emit_hdl, emit_lut, emit_sop, synthesize, verify_cover
from .tables import Registry, load_default, load_tables, validate_registry

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_DATA = 3


def _word_argument(text: str) -> int:
    try:
        return parse_word(text)
    except (ValueError, Seg17Error):
        raise argparse.ArgumentTypeError(f"bad segment word {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--data",
        metavar="FILE",
        help="SEGTAB/1 file overriding the embedded tables",
    )

    parser = argparse.ArgumentParser(
        prog="seg17",
        description="17-segment multilingual numeral display toolkit",
    )
    parser.add_argument("--version", action="version", version=f"seg17 {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", parents=[common], help="show script tables")
    p.add_argument("--aliases", action="store_true", help="also list language aliases")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("encode", parents=[common], help="digits or text to segment words")
    p.add_argument("--script", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--digits", nargs="+", type=int, metavar="D")
    group.add_argument("--text")
    p.add_argument("--format", choices=("names", "hex", "bin"), default="names")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="segment pattern to candidate digits")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", type=_word_argument, metavar="HEX")
    group.add_argument("--segments", metavar="LIST")
    p.add_argument("--scope", default="all", help="script name, or 'all'")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("render", parents=[common], help="draw text as SVG or terminal art")
    p.add_argument("--script", required=True)
    p.add_argument("--text", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--svg", metavar="FILE")
    group.add_argument("--terminal", action="store_true")
    p.add_argument("--scale", type=float, default=64.0, help="pixels per digit width")
    p.add_argument("--show-off", action="store_true", help="ghost unlit segments")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("synth", parents=[common], help="emit minimized decoder logic")
    p.add_argument("--emit", choices=("sop", "hdl", "lut"), required=True)
    p.add_argument("--out", required=True, metavar="FILE")
    p.add_argument("--script", help="restrict to one script (drops script-select bits)")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("simulate", parents=[common], help="trace a multiplexed driver")
    p.add_argument("--script", required=True)
    p.add_argument("--text", required=True)
    p.add_argument("--positions", type=int, required=True)
    p.add_argument("--refresh-hz", type=float, required=True)
    p.add_argument("--ticks", type=int, required=True)
    p.add_argument("--out", required=True, metavar="FILE.csv")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("validate", parents=[common], help="check a SEGTAB/1 data file")
    p.set_defaults(func=cmd_validate)

    return parser


def _load_registry(args) -> Registry:
    if args.data:
        return load_tables(Path(args.data).read_text(encoding="utf-8"))
    return load_default()


def cmd_list(registry: Registry, args) -> int:
    print(f"{'id':>3}  {'key':<12} languages")
    for table in registry.tables:
        print(f"{table.id:>3}  {table.key:<12} {', '.join(table.languages)}")
    if args.aliases:
        print()
        print("alias -> key")
        for name in registry.valid_names():
            print(f"  {name} -> {registry.lookup(name).key}")
    return EXIT_OK


def _format_digit(word: int, fmt: str) -> str:
    if fmt == "hex":
        return word_hex(word)
    if fmt == "bin":
        return f"0b{word:017b}"
    return format_segments(word)


def cmd_encode(registry: Registry, args) -> int:
    table = registry.lookup(args.script)
    if args.digits is not None:
        encoded = encode_number(table, args.digits)
    else:
        encoded = encode_text(table, args.text)
    for digit in encoded:
        print(_format_digit(digit.word, args.format))
    return EXIT_OK


def cmd_decode(registry: Registry, args) -> int:
    word = args.word if args.word is not None else pack(parse_segment_list(args.segments))
    scope = None if args.scope.lower() == "all" else registry.lookup(args.scope)
    for candidate in decode_set(registry, word, scope):
        print(f"{registry.get(candidate.script_id).key} {candidate.value}")
    return EXIT_OK


def cmd_render(registry: Registry, args) -> int:
    table = registry.lookup(args.script)
    words = [digit.word for digit in encode_text(table, args.text)]
    if args.terminal:
        print(render_terminal(words))
    else:
        style = RenderStyle(scale=args.scale, show_off=args.show_off)
        Path(args.svg).write_text(render_svg(words, style), encoding="utf-8")
    return EXIT_OK


def cmd_synth(registry: Registry, args) -> int:
    script = registry.lookup(args.script) if args.script else None
    out = Path(args.out)
    if args.emit == "lut":
        out.write_bytes(emit_lut(registry, script))
        return EXIT_OK
    table = build_truth_table(registry, script)
    covers = synthesize(table)
    for cover in covers:
        report = verify_cover(cover, table)
        if not report.equivalent:  # pragma: no cover - minimize postcondition
            raise Seg17Error(f"synthesis self-check failed: {report.counterexample}")
    text = emit_sop(table, covers) if args.emit == "sop" else emit_hdl(table, covers)
    out.write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_simulate(registry: Registry, args) -> int:
    table = registry.lookup(args.script)
    words = tuple(digit.word for digit in encode_text(table, args.text))
    config = DisplayConfig(args.positions, args.refresh_hz, words)
    trace = run_simulation(config, args.ticks)
    Path(args.out).write_text(trace_to_csv(trace), encoding="utf-8")
    return EXIT_OK


def cmd_validate(registry: Registry, args) -> int:
    # registry already loaded (and therefore error-free); report in full
    report = validate_registry(registry)
    print(f"tables: {len(registry.tables)}")
    print(f"glyphs: {registry.glyph_count}")
    print(f"aliases: {len(registry.valid_names())}")
    print(f"errors: {len(report.errors)}")
    print(f"warnings: {len(report.warnings)}")
    for warning in report.warnings:
        print(f"  {warning}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        registry = _load_registry(args)
        return args.func(registry, args)
    except (TableFormatError, TableValidationError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except Seg17Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def entrypoint() -> None:
    sys.exit(main())
