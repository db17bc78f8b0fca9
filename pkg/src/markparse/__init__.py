"""markparse: subject-wise mark extraction from scanned marksheet OCR output.

The pipeline turns an OCR token dump (or an image plus an external
engine) into verified subject -> mark records: preprocessing, line
reconstruction, state detection, fuzzy subject matching, and mark
resolution, with an HTTP service for human review and confirmation.
"""

__version__ = "0.1.0"

from .layout import LayoutConfig, TextLine, group_lines, line_text, token_center
from .lexicon import (
    Lexicon,
    MatchConfig,
    SubjectEntry,
    SubjectMatch,
    correct_subject,
    default_lexicon,
    detect_state,
    load_lexicon,
    match_subjects,
    segment_merged,
)
from .marks import (
    MarkCandidate,
    MarkRecord,
    MarksheetResult,
    StageRecord,
    extract_candidates,
    extract_marksheet,
    resolve_mark,
)
from .numwords import NUMBER_WORDS, parse_number_word
from .ocr import OcrToken, TokenStream, load_token_dump, run_external_engine, serialize_token_dump
from .pipeline import EvalReport, PipelineConfig, evaluate_corpus, load_gold, parse_document
from .preprocess import (
    BinaryImage,
    GrayImage,
    SkewEstimate,
    binarize_otsu,
    denoise_median,
    estimate_skew,
    rotate,
    to_grayscale,
)
from .text import normalize, similarity

__all__ = [
    "__version__",
    "BinaryImage",
    "EvalReport",
    "GrayImage",
    "LayoutConfig",
    "Lexicon",
    "MarkCandidate",
    "MarkRecord",
    "MarksheetResult",
    "MatchConfig",
    "NUMBER_WORDS",
    "OcrToken",
    "PipelineConfig",
    "SkewEstimate",
    "StageRecord",
    "SubjectEntry",
    "SubjectMatch",
    "TextLine",
    "TokenStream",
    "binarize_otsu",
    "correct_subject",
    "default_lexicon",
    "denoise_median",
    "detect_state",
    "estimate_skew",
    "evaluate_corpus",
    "extract_candidates",
    "extract_marksheet",
    "group_lines",
    "line_text",
    "load_gold",
    "load_lexicon",
    "load_token_dump",
    "match_subjects",
    "normalize",
    "parse_document",
    "parse_number_word",
    "resolve_mark",
    "rotate",
    "run_external_engine",
    "segment_merged",
    "serialize_token_dump",
    "similarity",
    "to_grayscale",
    "token_center",
]
