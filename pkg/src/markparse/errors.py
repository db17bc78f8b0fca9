"""Exception types shared across the package."""


class MarkparseError(Exception):
    """Base class for all markparse errors."""


class InvalidImage(MarkparseError):
    """Raster input is structurally unusable (zero-sized, wrong shape, bad header)."""


class InvalidParameter(MarkparseError):
    """An operation parameter violates its contract."""


class OrientationUnsupported(MarkparseError):
    """Requested or detected rotation is outside the supported range."""


class DumpParseError(MarkparseError):
    """Token dump could not be parsed.

    ``record_index`` points at the offending token record, or None when the
    failure is at document level.
    """

    def __init__(self, message: str, record_index: int | None = None):
        self.record_index = record_index
        if record_index is not None:
            message = f"token record {record_index}: {message}"
        super().__init__(message)


class EngineFailure(MarkparseError):
    """External OCR engine exited with a nonzero status."""

    def __init__(self, message: str, stderr: str = ""):
        self.stderr = stderr
        super().__init__(message)


class EngineTimeout(MarkparseError):
    """External OCR engine exceeded its deadline."""


class EngineNotConfigured(MarkparseError):
    """Image input was given but no external engine command is configured."""


class InputNotFound(MarkparseError):
    """Input path does not exist."""


class MissingGold(MarkparseError):
    """One or more parsed documents have no gold entry."""

    def __init__(self, source_ids: list[str]):
        self.source_ids = list(source_ids)
        super().__init__("no gold entry for: " + ", ".join(self.source_ids))


class LexiconError(MarkparseError):
    """Lexicon file violates its schema or invariants."""
