"""FastAPI service exposing the display toolkit to multiple clients.

Run with: uvicorn seg17.service.app:app
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse, PlainTextResponse, Response

from .. import __version__
from ..codec import collision_report, decode_set, encode_number, encode_text
from ..exceptions import (
    Seg17Error,
    TableFormatError,
    TableValidationError,
    UnknownScriptError,
)
from ..render import RenderStyle, render_svg, render_terminal
from ..segments import format_segments, pack, parse_word, word_hex
from ..simulate import DisplayConfig, run_simulation, trace_to_csv
from ..synth import build_truth_table, emit_hdl, emit_lut, emit_sop, synthesize
from ..tables import Registry, ScriptTable, load_default, parse_tables, validate_registry
from .schemas import (
    CandidateOut,
    CollisionOut,
    DecodeRequest,
    DecodeResponse,
    EncodedDigitOut,
    EncodeRequest,
    EncodeResponse,
    RenderRequest,
    ScriptInfo,
    SimulateRequest,
    SynthRequest,
    ValidateRequest,
    ValidateResponse,
)


def _script_info(table: ScriptTable) -> ScriptInfo:
    zero = None
    if table.codepoint_base is not None:
        zero = f"U+{table.codepoint_base:04X}"
    return ScriptInfo(
        id=table.id,
        key=table.key,
        display_name=table.display_name,
        languages=list(table.languages),
        digit_zero=zero,
        values=table.values(),
    )


def _candidate(registry: Registry, script_id: int, value: int) -> CandidateOut:
    return CandidateOut(script=registry.get(script_id).key, script_id=script_id, value=value)


def create_app(registry: Registry | None = None) -> FastAPI:
    reg = registry if registry is not None else load_default()
    app = FastAPI(title="seg17 display service", version=__version__)

    @app.exception_handler(Seg17Error)
    def _domain_error(request, exc: Seg17Error):
        if isinstance(exc, UnknownScriptError):
            status = 404
        elif isinstance(exc, (TableFormatError, TableValidationError)):
            status = 422
        else:
            status = 400
        return JSONResponse(status_code=status, content={"detail": str(exc)})

    @app.get("/scripts", response_model=list[ScriptInfo])
    def scripts():
        return [_script_info(t) for t in reg.tables]

    @app.get("/scripts/{name}", response_model=ScriptInfo)
    def script(name: str):
        return _script_info(reg.lookup(name))

    @app.post("/encode", response_model=EncodeResponse)
    def encode(req: EncodeRequest):
        table = reg.lookup(req.script)
        if req.digits is not None:
            encoded = encode_number(table, req.digits)
        else:
            encoded = encode_text(table, req.text or "")
        return EncodeResponse(
            script=table.key,
            script_id=table.id,
            digits=[
                EncodedDigitOut(
                    value=d.value,
                    word=word_hex(d.word),
                    segments=format_segments(d.word).split(",") if d.word else [],
                )
                for d in encoded
            ],
        )

    @app.post("/decode", response_model=DecodeResponse)
    def decode(req: DecodeRequest):
        if req.word is not None:
            word = parse_word(req.word)
        else:
            word = pack(req.segments or [])
        scope = None if req.scope.lower() == "all" else reg.lookup(req.scope)
        matches = [
            _candidate(reg, c.script_id, c.value) for c in decode_set(reg, word, scope)
        ]
        return DecodeResponse(word=word_hex(word), matches=matches)

    @app.get("/collisions", response_model=list[CollisionOut])
    def collisions():
        return [
            CollisionOut(
                word=word_hex(word),
                segments=format_segments(word).split(","),
                matches=[_candidate(reg, c.script_id, c.value) for c in candidates],
            )
            for word, candidates in collision_report(reg)
        ]

    @app.post("/render/svg")
    def render_svg_endpoint(req: RenderRequest):
        table = reg.lookup(req.script)
        words = [d.word for d in encode_text(table, req.text)]
        style = RenderStyle(scale=req.scale, show_off=req.show_off)
        return Response(content=render_svg(words, style), media_type="image/svg+xml")

    @app.post("/render/terminal", response_class=PlainTextResponse)
    def render_terminal_endpoint(req: RenderRequest):
        table = reg.lookup(req.script)
        words = [d.word for d in encode_text(table, req.text)]
        return render_terminal(words)

    @app.post("/synth")
    def synth(req: SynthRequest):
        script = reg.lookup(req.script) if req.script else None
        if req.emit == "lut":
            return Response(
                content=emit_lut(reg, script), media_type="application/octet-stream"
            )
        table = build_truth_table(reg, script)
        covers = synthesize(table)
        text = emit_sop(table, covers) if req.emit == "sop" else emit_hdl(table, covers)
        return PlainTextResponse(text)

    @app.post("/simulate", response_class=PlainTextResponse)
    def simulate(req: SimulateRequest):
        table = reg.lookup(req.script)
        words = tuple(d.word for d in encode_text(table, req.text))
        config = DisplayConfig(req.positions, req.refresh_hz, words)
        return PlainTextResponse(
            trace_to_csv(run_simulation(config, req.ticks)), media_type="text/csv"
        )

    @app.post("/validate", response_model=ValidateResponse)
    def validate(req: ValidateRequest):
        if req.data is None:
            target = reg
        else:
            try:
                target = parse_tables(req.data)
            except TableFormatError as exc:
                return ValidateResponse(
                    ok=False, tables=0, glyphs=0, errors=[str(exc)], warnings=[]
                )
        report = validate_registry(target)
        return ValidateResponse(
            ok=report.ok,
            tables=len(target.tables),
            glyphs=target.glyph_count,
            errors=list(report.errors),
            warnings=list(report.warnings),
        )

    return app


app = create_app()
