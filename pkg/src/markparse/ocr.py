"""Engine-agnostic OCR token interchange.

The core never talks to a recognition engine directly. It consumes token
dumps: UTF-8 JSON files (extension ``.ocr.json``) with the schema

    {"source_id": "...", "page": 1,
     "tokens": [{"polygon": [[x, y], [x, y], [x, y], [x, y]],
                 "text": "...", "confidence": 0.97}, ...]}

Any engine can be adapted with a shim that prints this schema to stdout;
``run_external_engine`` spawns such a shim as a subprocess.
"""

from __future__ import annotations

import json
import shlex
import subprocess
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .errors import DumpParseError, EngineFailure, EngineTimeout

DUMP_SUFFIX = ".ocr.json"


@dataclass(frozen=True)
class OcrToken:
    """One recognized fragment: 4-point polygon, text, confidence.

    Polygon points are (x, y) pixels, clockwise from top-left, with the
    origin at the image's top-left corner and y growing downward.
    """

    polygon: tuple[tuple[float, float], ...]
    text: str
    confidence: float

    def __post_init__(self):
        if len(self.polygon) != 4:
            raise ValueError("polygon must have exactly 4 points")
        polygon = tuple((float(x), float(y)) for x, y in self.polygon)
        for x, y in polygon:
            if x < 0 or y < 0:
                raise ValueError("polygon coordinates must be >= 0")
        object.__setattr__(self, "polygon", polygon)
        if not self.text.strip():
            raise ValueError("token text must be non-empty")
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError("confidence must be within [0, 1]")


@dataclass(frozen=True)
class TokenStream:
    """Tokens in engine emission order for one document page."""

    tokens: tuple[OcrToken, ...]
    source_id: str
    page: int = 1

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if self.page < 1:
            raise ValueError("page must be >= 1")


def _token_from_record(record: Any, index: int) -> OcrToken:
    if not isinstance(record, dict):
        raise DumpParseError("token record must be an object", index)
    try:
        polygon = record["polygon"]
        text = record["text"]
        confidence = record["confidence"]
    except (KeyError, TypeError) as exc:
        raise DumpParseError(f"missing field: {exc}", index) from exc
    if not isinstance(polygon, list) or len(polygon) != 4:
        raise DumpParseError("polygon must be a list of 4 points", index)
    points = []
    for point in polygon:
        if not isinstance(point, (list, tuple)) or len(point) != 2:
            raise DumpParseError("each polygon point must be an [x, y] pair", index)
        x, y = point
        if not isinstance(x, (int, float)) or not isinstance(y, (int, float)):
            raise DumpParseError("polygon coordinates must be numbers", index)
        points.append((float(x), float(y)))
    if not isinstance(text, str):
        raise DumpParseError("text must be a string", index)
    if not isinstance(confidence, (int, float)):
        raise DumpParseError("confidence must be a number", index)
    try:
        return OcrToken(polygon=tuple(points), text=text, confidence=float(confidence))
    except ValueError as exc:
        raise DumpParseError(str(exc), index) from exc


def load_token_dump(data: bytes | str) -> TokenStream:
    """Parse a token dump, preserving token order exactly."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DumpParseError(f"dump is not UTF-8: {exc}") from exc
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise DumpParseError(f"dump is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DumpParseError("dump root must be an object")
    source_id = doc.get("source_id")
    if not isinstance(source_id, str):
        raise DumpParseError("source_id must be a string")
    page = doc.get("page", 1)
    if not isinstance(page, int) or isinstance(page, bool) or page < 1:
        raise DumpParseError("page must be an integer >= 1")
    records = doc.get("tokens")
    if not isinstance(records, list):
        raise DumpParseError("tokens must be a list")
    tokens = tuple(_token_from_record(record, i) for i, record in enumerate(records))
    return TokenStream(tokens=tokens, source_id=source_id, page=page)


def load_token_dump_file(path: str | Path) -> TokenStream:
    return load_token_dump(Path(path).read_bytes())


def serialize_token_dump(stream: TokenStream) -> str:
    """Inverse of load_token_dump; round-trips every valid stream."""
    return json.dumps(
        {
            "source_id": stream.source_id,
            "page": stream.page,
            "tokens": [
                {
                    "polygon": [[x, y] for x, y in token.polygon],
                    "text": token.text,
                    "confidence": token.confidence,
                }
                for token in stream.tokens
            ],
        },
        ensure_ascii=False,
    )


def run_external_engine(
    image_path: str | Path,
    engine_command: str,
    timeout: float = 60.0,
) -> TokenStream:
    """Run an external OCR engine shim and parse its stdout dump.

    ``engine_command`` is shell-split; any ``{input}`` placeholder is
    replaced with the image path, otherwise the path is appended. The
    shim must write a token dump to stdout and exit 0.
    """
    args = shlex.split(engine_command)
    if not args:
        raise EngineFailure("empty engine command")
    path_str = str(image_path)
    if any("{input}" in a for a in args):
        args = [a.replace("{input}", path_str) for a in args]
    else:
        args.append(path_str)
    try:
        proc = subprocess.run(args, capture_output=True, timeout=timeout)
    except subprocess.TimeoutExpired as exc:
        raise EngineTimeout(f"engine exceeded {timeout}s deadline") from exc
    except OSError as exc:
        raise EngineFailure(f"engine could not be started: {exc}") from exc
    if proc.returncode != 0:
        stderr = proc.stderr.decode("utf-8", errors="replace").strip()
        raise EngineFailure(
            f"engine exited with status {proc.returncode}", stderr=stderr
        )
    return load_token_dump(proc.stdout)
