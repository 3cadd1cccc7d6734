"""Request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator


class ScriptInfo(BaseModel):
    id: int
    key: str
    display_name: str
    languages: list[str]
    digit_zero: str | None = None  # e.g. "U+0966"
    values: list[int]


class EncodedDigitOut(BaseModel):
    value: int
    word: str  # 0x + five hex digits
    segments: list[str]


class EncodeRequest(BaseModel):
    script: str
    digits: list[int] | None = None
    text: str | None = None

    @model_validator(mode="after")
    def _exactly_one_payload(self):
        if (self.digits is None) == (self.text is None):
            raise ValueError("provide exactly one of 'digits' or 'text'")
        return self


class EncodeResponse(BaseModel):
    script: str
    script_id: int
    digits: list[EncodedDigitOut]


class DecodeRequest(BaseModel):
    word: str | None = None  # hex
    segments: list[str] | None = None
    scope: str = "all"

    @model_validator(mode="after")
    def _exactly_one_pattern(self):
        if (self.word is None) == (self.segments is None):
            raise ValueError("provide exactly one of 'word' or 'segments'")
        return self


class CandidateOut(BaseModel):
    script: str
    script_id: int
    value: int


class DecodeResponse(BaseModel):
    word: str
    matches: list[CandidateOut]


class CollisionOut(BaseModel):
    word: str
    segments: list[str]
    matches: list[CandidateOut]


class RenderRequest(BaseModel):
    script: str
    text: str
    scale: float = Field(default=64.0, gt=0)
    show_off: bool = False


class SynthRequest(BaseModel):
    emit: Literal["sop", "hdl", "lut"]
    script: str | None = None


class SimulateRequest(BaseModel):
    script: str
    text: str
    positions: int = Field(ge=1, le=64)
    refresh_hz: float = Field(gt=0)
    ticks: int = Field(ge=0)


class ValidateRequest(BaseModel):
    data: str | None = None  # SEGTAB/1 text; None checks the embedded tables


class ValidateResponse(BaseModel):
    ok: bool
    tables: int
    glyphs: int
    errors: list[str]
    warnings: list[str]
