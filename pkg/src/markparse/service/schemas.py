"""Pydantic request/response models for the review service."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field, field_validator


class MarkCandidateModel(BaseModel):
    value: int = Field(ge=0, le=100)
    source: Literal["numeral", "word"]
    token_span: list[int]


class MarkRecordModel(BaseModel):
    subject: str
    final_mark: int | None = Field(default=None, ge=0, le=100)
    max_mark: int = 100
    resolution: Literal["word-preferred", "max-numeral", "undetected"]
    candidates: list[MarkCandidateModel] = []


class DiagnosticModel(BaseModel):
    kind: str
    message: str
    detail: dict[str, Any] = {}


class StagesModel(BaseModel):
    preprocess: bool
    postprocess: bool


class MarksheetResultModel(BaseModel):
    source_id: str
    detected_state: str
    records: list[MarkRecordModel]
    diagnostics: list[DiagnosticModel]
    stages: StagesModel


class StoredResultModel(BaseModel):
    result_id: str
    status: Literal["extracted", "confirmed"]
    result: MarksheetResultModel
    corrections: dict[str, int]
    created_at: str
    confirmed_at: str | None


class ConfirmRequest(BaseModel):
    corrections: dict[str, int] = {}

    @field_validator("corrections")
    @classmethod
    def marks_in_range(cls, value: dict[str, int]) -> dict[str, int]:
        for subject, mark in value.items():
            if not 0 <= mark <= 100:
                raise ValueError(f"mark for {subject!r} must be within 0-100")
        return value


class HealthModel(BaseModel):
    status: str
    version: str
