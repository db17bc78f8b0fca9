"""Append-only result persistence for the review service.

Each stored result is one JSON file under the data directory, named by a
random 128-bit hex id. Writes go through a temp file plus atomic rename
under a lock, so concurrent requests never observe a half-written
record. Confirmed results are immutable except for byte-identical
idempotent replays.
"""

from __future__ import annotations

import json
import os
import secrets
import tempfile
import threading
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from .errors import MarkparseError

STATUS_EXTRACTED = "extracted"
STATUS_CONFIRMED = "confirmed"


class UnknownResult(MarkparseError):
    """No stored result under that id."""


class ConfirmConflict(MarkparseError):
    """Result already confirmed with different corrections."""


class InvalidCorrections(MarkparseError):
    """A correction mark is outside 0-100."""


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="milliseconds")


class ResultStore:
    """File-backed store of extraction results awaiting confirmation."""

    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def _path(self, result_id: str) -> Path:
        if not result_id.isalnum():
            raise UnknownResult(f"unknown result id: {result_id}")
        return self.data_dir / f"{result_id}.json"

    def _write(self, path: Path, record: dict[str, Any]) -> None:
        fd, tmp_name = tempfile.mkstemp(dir=self.data_dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(record, handle, ensure_ascii=False)
            os.replace(tmp_name, path)
        except BaseException:
            Path(tmp_name).unlink(missing_ok=True)
            raise

    def create(self, result_json: dict[str, Any]) -> dict[str, Any]:
        """Persist a fresh extraction; returns the stored record."""
        record = {
            "result_id": secrets.token_hex(16),
            "status": STATUS_EXTRACTED,
            "result": result_json,
            "corrections": {},
            "created_at": _utc_now(),
            "confirmed_at": None,
        }
        with self._lock:
            self._write(self._path(record["result_id"]), record)
        return record

    def get(self, result_id: str) -> dict[str, Any]:
        path = self._path(result_id)
        with self._lock:
            if not path.is_file():
                raise UnknownResult(f"unknown result id: {result_id}")
            return json.loads(path.read_text(encoding="utf-8"))

    def confirm(self, result_id: str, corrections: dict[str, int]) -> dict[str, Any]:
        """Confirm a result, storing reviewer corrections.

        Re-confirming with an identical corrections mapping replays the
        stored state; differing corrections on a confirmed result raise
        ConfirmConflict.
        """
        for subject, mark in corrections.items():
            if not isinstance(mark, int) or isinstance(mark, bool) or not 0 <= mark <= 100:
                raise InvalidCorrections(f"correction for {subject!r} must be an integer 0-100")
        path = self._path(result_id)
        with self._lock:
            if not path.is_file():
                raise UnknownResult(f"unknown result id: {result_id}")
            record = json.loads(path.read_text(encoding="utf-8"))
            if record["status"] == STATUS_CONFIRMED:
                if record["corrections"] == corrections:
                    return record
                raise ConfirmConflict(
                    "result already confirmed with different corrections"
                )
            record["status"] = STATUS_CONFIRMED
            record["corrections"] = dict(corrections)
            record["confirmed_at"] = _utc_now()
            self._write(path, record)
            return record
