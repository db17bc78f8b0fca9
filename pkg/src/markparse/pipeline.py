"""End-to-end orchestration and the corpus evaluation harness.

``parse_document`` composes the stages: (image mode) preprocess and run
the external engine, or (dump mode) load tokens directly; then group
lines, detect the state, match subjects, and extract marks.

Two stage toggles reproduce the classic ablation:

- ``preprocess``: image cleanup before recognition (image mode only)
- ``postprocess``: fuzzy lexicon matching with spell correction and
  merged-word segmentation; off means exact alias matching only

``evaluate_corpus`` scores parsed documents against a gold file
({source_id: {subject: mark}}) and buckets documents by how many of
their subjects resolved to the exact gold mark.
"""

from __future__ import annotations

import json
import tempfile
from dataclasses import dataclass, field, replace
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import Mapping, Sequence

from .diagnostics import ORIENTATION_REJECTED, Diagnostic
from .errors import (
    EngineNotConfigured,
    InputNotFound,
    MissingGold,
    OrientationUnsupported,
)
from .image_io import binary_to_gray, read_image, write_pgm
from .layout import LayoutConfig, group_lines
from .lexicon import Lexicon, MatchConfig, OTHER_STATE, default_lexicon, detect_state, match_subjects
from .marks import MarksheetResult, StageRecord, extract_marksheet
from .ocr import DUMP_SUFFIX, TokenStream, load_token_dump, run_external_engine
from .preprocess import (
    GrayImage,
    binarize_otsu,
    check_orientation,
    denoise_median,
    estimate_skew,
    rotate,
    to_grayscale,
)
from .text import normalize

PRESETS = ("v3", "v3a", "v4")


@dataclass
class PipelineConfig:
    """Stage toggles plus the knobs each stage needs."""

    preprocess: bool = True
    postprocess: bool = True
    layout: LayoutConfig = field(default_factory=LayoutConfig)
    match: MatchConfig = field(default_factory=MatchConfig)
    engine: str | None = None
    engine_timeout: float = 60.0
    lexicon: Lexicon = field(default_factory=default_lexicon)

    def with_preset(self, preset: str) -> "PipelineConfig":
        """v3 = baseline, v3a = + preprocessing, v4 = + postprocessing."""
        if preset not in PRESETS:
            raise ValueError(f"unknown preset {preset!r}; expected one of {PRESETS}")
        return replace(
            self,
            preprocess=preset in ("v3a", "v4"),
            postprocess=preset == "v4",
        )


def _is_dump_path(path: Path, head: bytes) -> bool:
    if path.name.endswith(DUMP_SUFFIX) or path.suffix == ".json":
        return True
    return head[:1] in (b"{", b"[")


def _preprocess_image(path: Path) -> GrayImage:
    """Grayscale, binarize, denoise, reject sideways pages, deskew."""
    raster = read_image(path)
    gray = raster if isinstance(raster, GrayImage) else to_grayscale(raster)
    binary = denoise_median(binarize_otsu(gray))
    check_orientation(binary)
    estimate = estimate_skew(binary)
    if estimate.angle != 0.0:
        binary = rotate(binary, estimate.angle)
    return binary_to_gray(binary)


def _tokens_for_document(path: Path, config: PipelineConfig) -> tuple[TokenStream, bool]:
    """Obtain the token stream; returns (stream, preprocess_ran)."""
    data = path.read_bytes()
    if _is_dump_path(path, data[:16]):
        return load_token_dump(data), False
    if not config.engine:
        raise EngineNotConfigured(
            "image input requires an external engine command (see ENGINE_CMD)"
        )
    if not config.preprocess:
        return run_external_engine(path, config.engine, config.engine_timeout), False
    cleaned = _preprocess_image(path)
    tmp = tempfile.NamedTemporaryFile(suffix=".pgm", delete=False)
    try:
        tmp.close()
        write_pgm(cleaned, tmp.name)
        stream = run_external_engine(tmp.name, config.engine, config.engine_timeout)
    finally:
        Path(tmp.name).unlink(missing_ok=True)
    return stream, True


def parse_document(input_path: str | Path, config: PipelineConfig | None = None) -> MarksheetResult:
    """Parse one document (image or token dump) into a MarksheetResult.

    Orientation rejection is not an error: the result carries an
    orientation-rejected diagnostic and no records so a reviewer can
    handle the document manually.
    """
    config = config or PipelineConfig()
    path = Path(input_path)
    if not path.is_file():
        raise InputNotFound(f"input not found: {path}")

    try:
        stream, preprocess_ran = _tokens_for_document(path, config)
    except OrientationUnsupported as exc:
        return MarksheetResult(
            source_id=path.stem,
            detected_state=OTHER_STATE,
            records=[],
            diagnostics=[Diagnostic(
                kind=ORIENTATION_REJECTED,
                message=str(exc),
                detail={"input": path.name},
            )],
            stages=StageRecord(preprocess=True, postprocess=config.postprocess),
        )

    match_config = config.match if config.postprocess else MatchConfig.exact_only()
    lines = group_lines(stream, config.layout)
    state = detect_state(lines, config.lexicon, match_config)
    matches, match_diagnostics = match_subjects(lines, state, config.lexicon, match_config)
    return extract_marksheet(
        lines,
        state,
        matches,
        config.lexicon,
        source_id=stream.source_id,
        extra_diagnostics=match_diagnostics,
        stages=StageRecord(preprocess=preprocess_ran, postprocess=config.postprocess),
    )


@dataclass(frozen=True)
class DocScore:
    """Per-document correctness against gold."""

    source_id: str
    correct_count: int
    expected_count: int


@dataclass
class EvalReport:
    """Bucket percentages over a document set.

    Bucket arithmetic follows the printed-table convention: the 5 and 4
    buckets are rounded half-up to 2 decimals, the 4-5 bucket is their
    sum, and the 0-3 bucket is its complement to 100, so the rows always
    add up exactly as printed.
    """

    documents: int
    per_document: list[DocScore]
    buckets: dict[str, float]

    BUCKET_LABELS = ("5", "4", "4-5", "0-3")

    def to_json(self) -> dict:
        return {
            "documents": self.documents,
            "buckets": {k: self.buckets[k] for k in self.BUCKET_LABELS},
            "per_document": [
                {
                    "source_id": d.source_id,
                    "correct_count": d.correct_count,
                    "expected_count": d.expected_count,
                }
                for d in self.per_document
            ],
        }

    def format_table(self) -> str:
        rows = [f"documents evaluated : {self.documents}"]
        for label in self.BUCKET_LABELS:
            rows.append(f"{label + ' marks':<12}: {self.buckets[label]:.2f}%")
        return "\n".join(rows)


def _round2(value: Decimal) -> Decimal:
    return value.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)


def evaluate_corpus(
    results: Sequence[MarksheetResult],
    gold: Mapping[str, Mapping[str, int]],
) -> EvalReport:
    """Score results against gold subject->mark pairs.

    A gold subject counts correct iff some record carries that canonical
    subject (compared after normalization) and exactly the gold mark.
    Every result must have a gold entry, else MissingGold is raised.
    """
    missing = [r.source_id for r in results if r.source_id not in gold]
    if missing:
        raise MissingGold(sorted(set(missing)))

    per_document: list[DocScore] = []
    for result in results:
        expected = gold[result.source_id]
        extracted = {
            normalize(record.canonical_subject): record.final_mark
            for record in result.records
        }
        correct = sum(
            1
            for subject, mark in expected.items()
            if extracted.get(normalize(subject)) == mark
        )
        per_document.append(DocScore(result.source_id, correct, len(expected)))
    per_document.sort(key=lambda d: d.source_id)

    total = len(per_document)
    if total == 0:
        buckets = {label: 0.0 for label in EvalReport.BUCKET_LABELS}
        return EvalReport(documents=0, per_document=[], buckets=buckets)

    n5 = sum(1 for d in per_document if d.correct_count == 5)
    n4 = sum(1 for d in per_document if d.correct_count == 4)
    pct5 = _round2(Decimal(100 * n5) / Decimal(total))
    pct4 = _round2(Decimal(100 * n4) / Decimal(total))
    pct45 = pct5 + pct4
    pct03 = Decimal(100) - pct45
    buckets = {
        "5": float(pct5),
        "4": float(pct4),
        "4-5": float(pct45),
        "0-3": float(pct03),
    }
    return EvalReport(documents=total, per_document=per_document, buckets=buckets)


def load_gold(path: str | Path) -> dict[str, dict[str, int]]:
    """Load a gold file: {source_id: {subject: mark}}."""
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(doc, dict):
        raise ValueError("gold file must be a JSON object")
    gold: dict[str, dict[str, int]] = {}
    for source_id, subjects in doc.items():
        if not isinstance(subjects, dict):
            raise ValueError(f"gold entry for {source_id} must be an object")
        gold[source_id] = {str(k): int(v) for k, v in subjects.items()}
    return gold
