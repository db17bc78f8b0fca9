"""Per-subject mark candidate extraction and resolution.

Marks are assumed out of 100 and printed both as numerals (theory,
practical, total columns) and as words. Words are the more reliable
channel, so a parsed word value wins; otherwise the highest numeral is
taken, since the total column is never smaller than its components.
Digit strings above 100 are identifiers (years, roll numbers), rejected
with a diagnostic rather than clamped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Literal, Mapping, Sequence

from .diagnostics import (
    GRADE_SHEET_SUSPECTED,
    REJECTED_CANDIDATE,
    Diagnostic,
)
from .layout import TextLine
from .lexicon import Lexicon, SubjectMatch
from .numwords import NUMBER_WORDS, expand_number_token, parse_prefix
from .text import normalize

MAX_MARK = 100

Resolution = Literal["word-preferred", "max-numeral", "undetected"]

WORD_PREFERRED: Resolution = "word-preferred"
MAX_NUMERAL: Resolution = "max-numeral"
UNDETECTED: Resolution = "undetected"


@dataclass(frozen=True)
class MarkCandidate:
    """One possible mark value found after a subject anchor."""

    value: int
    source: Literal["numeral", "word"]
    token_span: tuple[int, int]

    def __post_init__(self):
        if not 0 <= self.value <= MAX_MARK:
            raise ValueError("mark value must be within 0-100")

    def to_json(self) -> dict[str, Any]:
        return {"value": self.value, "source": self.source, "token_span": list(self.token_span)}


@dataclass(frozen=True)
class MarkRecord:
    """Resolved mark for one canonical subject."""

    canonical_subject: str
    final_mark: int | None
    resolution: Resolution
    candidates: tuple[MarkCandidate, ...] = ()
    max_mark: int = MAX_MARK

    def __post_init__(self):
        if (self.final_mark is None) != (self.resolution == UNDETECTED):
            raise ValueError("final_mark must be present iff resolution is not undetected")

    def to_json(self) -> dict[str, Any]:
        return {
            "subject": self.canonical_subject,
            "final_mark": self.final_mark,
            "max_mark": self.max_mark,
            "resolution": self.resolution,
            "candidates": [c.to_json() for c in self.candidates],
        }


@dataclass(frozen=True)
class StageRecord:
    """Which optional pipeline stages actually ran for a document."""

    preprocess: bool = False
    postprocess: bool = False

    def to_json(self) -> dict[str, bool]:
        return {"preprocess": self.preprocess, "postprocess": self.postprocess}


@dataclass
class MarksheetResult:
    """Everything extracted from one document."""

    source_id: str
    detected_state: str
    records: list[MarkRecord] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)
    stages: StageRecord = StageRecord()

    def marks_by_subject(self) -> dict[str, int | None]:
        return {r.canonical_subject: r.final_mark for r in self.records}

    def to_json(self) -> dict[str, Any]:
        return {
            "source_id": self.source_id,
            "detected_state": self.detected_state,
            "records": [r.to_json() for r in self.records],
            "diagnostics": [d.to_json() for d in self.diagnostics],
            "stages": self.stages.to_json(),
        }

    @staticmethod
    def from_json(data: Mapping[str, Any]) -> "MarksheetResult":
        records = []
        for r in data.get("records", []):
            records.append(MarkRecord(
                canonical_subject=r["subject"],
                final_mark=r["final_mark"],
                resolution=r["resolution"],
                candidates=tuple(
                    MarkCandidate(c["value"], c["source"], tuple(c["token_span"]))
                    for c in r.get("candidates", [])
                ),
                max_mark=r.get("max_mark", MAX_MARK),
            ))
        stages = data.get("stages", {})
        return MarksheetResult(
            source_id=data["source_id"],
            detected_state=data["detected_state"],
            records=records,
            diagnostics=[Diagnostic.from_json(d) for d in data.get("diagnostics", [])],
            stages=StageRecord(
                preprocess=bool(stages.get("preprocess", False)),
                postprocess=bool(stages.get("postprocess", False)),
            ),
        )


def extract_candidates(
    line: TextLine,
    after_index: int,
    number_words: Mapping[str, int] | None = None,
) -> tuple[list[MarkCandidate], list[Diagnostic]]:
    """Scan tokens after the subject anchor for mark candidates.

    Pure digit strings parsing to 0-100 become numeral candidates
    (leading zeros allowed); digit strings above 100 are rejected with a
    diagnostic. Maximal runs of number words (including hyphenated and
    glued forms) are parsed into word candidates, longest valid prefix
    first.
    """
    vocab = NUMBER_WORDS if number_words is None else number_words
    candidates: list[MarkCandidate] = []
    diagnostics: list[Diagnostic] = []

    # expansion per token: list of number words, or None if not a number token
    expansions: list[list[str] | None] = []
    texts = [normalize(t.text) for t in line.tokens]
    for text in texts:
        expansions.append(expand_number_token(text, vocab) if text else None)

    j = after_index
    while j < len(line.tokens):
        text = texts[j]
        if text.isdigit():
            value = int(text)
            if value <= MAX_MARK:
                candidates.append(MarkCandidate(value, "numeral", (j, j + 1)))
            else:
                diagnostics.append(Diagnostic(
                    kind=REJECTED_CANDIDATE,
                    message=f"numeral {text} exceeds 100; treated as an identifier",
                    detail={"token_index": j, "text": text},
                ))
            j += 1
            continue
        if expansions[j] is not None:
            run_start = j
            run_end = j
            words: list[str] = []
            word_token: list[int] = []
            while run_end < len(line.tokens) and expansions[run_end] is not None:
                for word in expansions[run_end]:
                    words.append(word)
                    word_token.append(run_end)
                run_end += 1
            pos = 0
            while pos < len(words):
                parsed = parse_prefix(words[pos:], vocab)
                if parsed is None:
                    pos += 1
                    continue
                value, consumed = parsed
                span = (word_token[pos], word_token[pos + consumed - 1] + 1)
                candidates.append(MarkCandidate(value, "word", span))
                pos += consumed
            j = run_end
            continue
        j += 1

    return candidates, diagnostics


def resolve_mark(candidates: Sequence[MarkCandidate]) -> tuple[int | None, Resolution]:
    """Pick the final mark: best word value, else highest numeral.

    Word candidates win because the written form is harder for the
    engine to corrupt; among several the maximum is kept, mirroring the
    total-is-highest rule used for numerals.
    """
    word_values = [c.value for c in candidates if c.source == "word"]
    if word_values:
        return max(word_values), WORD_PREFERRED
    numeral_values = [c.value for c in candidates if c.source == "numeral"]
    if numeral_values:
        return max(numeral_values), MAX_NUMERAL
    return None, UNDETECTED


def extract_marksheet(
    lines: Sequence[TextLine],
    state: str,
    matches: Sequence[SubjectMatch],
    lexicon: Lexicon,
    source_id: str = "",
    extra_diagnostics: Sequence[Diagnostic] = (),
    stages: StageRecord = StageRecord(),
) -> MarksheetResult:
    """Assemble one MarkRecord per subject match, plus diagnostics.

    When at least half of the resolved marks are 10 or less the sheet is
    probably grade-based (0-10), which this parser cannot interpret; a
    grade-sheet-suspected diagnostic flags it for the reviewer while the
    records are still emitted.
    """
    records: list[MarkRecord] = []
    diagnostics = list(extra_diagnostics)
    for match in matches:
        line = lines[match.line_index]
        candidates, cand_diags = extract_candidates(line, match.token_end, lexicon.number_words)
        for diag in cand_diags:
            diagnostics.append(Diagnostic(
                kind=diag.kind,
                message=diag.message,
                detail={**diag.detail, "line_index": match.line_index},
            ))
        final_mark, resolution = resolve_mark(candidates)
        records.append(MarkRecord(
            canonical_subject=match.canonical_subject,
            final_mark=final_mark,
            resolution=resolution,
            candidates=tuple(candidates),
        ))

    resolved = [r.final_mark for r in records if r.final_mark is not None]
    if resolved and 2 * sum(1 for m in resolved if m <= 10) >= len(resolved):
        diagnostics.append(Diagnostic(
            kind=GRADE_SHEET_SUSPECTED,
            message="at least half of the resolved marks are <= 10; "
                    "this may be a grade sheet (0-10) rather than marks out of 100",
            detail={"resolved_marks": resolved},
        ))

    return MarksheetResult(
        source_id=source_id,
        detected_state=state,
        records=records,
        diagnostics=diagnostics,
        stages=stages,
    )
