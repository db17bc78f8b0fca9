"""Structured notices attached to extraction results for the human reviewer."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

DUPLICATE_SUBJECT = "duplicate-subject"
REJECTED_CANDIDATE = "rejected-candidate"
ORIENTATION_REJECTED = "orientation-rejected"
GRADE_SHEET_SUSPECTED = "grade-sheet-suspected"


@dataclass(frozen=True)
class Diagnostic:
    """One reviewer-facing notice: what happened and where."""

    kind: str
    message: str
    detail: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.kind, "message": self.message, "detail": dict(self.detail)}

    @staticmethod
    def from_json(data: dict[str, Any]) -> "Diagnostic":
        return Diagnostic(
            kind=str(data["kind"]),
            message=str(data["message"]),
            detail=dict(data.get("detail", {})),
        )
