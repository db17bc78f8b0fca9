"""English cardinal words for 0-100 and the parser that reads them.

Marksheets print the obtained total both in numerals and in words; the
word form is the more reliable channel, so it needs a strict parser.
The grammar covers exactly 0-100: units, teens, tens, tens+unit
(space, hyphen, or glued together), and HUNDRED / ONE HUNDRED.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .text import segment_word

_UNITS = [
    "ZERO", "ONE", "TWO", "THREE", "FOUR",
    "FIVE", "SIX", "SEVEN", "EIGHT", "NINE",
]
_TEENS = [
    "TEN", "ELEVEN", "TWELVE", "THIRTEEN", "FOURTEEN",
    "FIFTEEN", "SIXTEEN", "SEVENTEEN", "EIGHTEEN", "NINETEEN",
]
_TENS = [
    "TWENTY", "THIRTY", "FORTY", "FIFTY",
    "SIXTY", "SEVENTY", "EIGHTY", "NINETY",
]


def build_number_words() -> dict[str, int]:
    """Word -> value vocabulary for the supported cardinals."""
    vocab = {word: value for value, word in enumerate(_UNITS)}
    vocab.update({word: 10 + i for i, word in enumerate(_TEENS)})
    vocab.update({word: 20 + 10 * i for i, word in enumerate(_TENS)})
    vocab["HUNDRED"] = 100
    return vocab


NUMBER_WORDS = build_number_words()


def expand_number_token(word: str, number_words: Mapping[str, int] | None = None) -> list[str] | None:
    """Expand one normalized token into plain number words, or None.

    Handles hyphenated ("SIXTY-THREE") and glued ("SIXTYTHREE") forms;
    glued forms are split by exact segmentation over the vocabulary.
    """
    vocab = NUMBER_WORDS if number_words is None else number_words
    pieces = [p for p in word.split("-") if p]
    if not pieces:
        return None
    out: list[str] = []
    for piece in pieces:
        if piece in vocab:
            out.append(piece)
            continue
        parts = segment_word(piece, list(vocab), threshold=1.0, max_segments=3)
        if len(parts) > 1 and all(p in vocab for p in parts):
            out.extend(parts)
        else:
            return None
    return out


def parse_prefix(words: Sequence[str], number_words: Mapping[str, int] | None = None) -> tuple[int, int] | None:
    """Parse the longest valid cardinal prefix of plain number words.

    Returns (value, words consumed) or None when the first word cannot
    start a cardinal. Valid forms: any single vocabulary word; a tens
    word followed by a unit 1-9; ONE HUNDRED. Nothing exceeds 100.
    """
    vocab = NUMBER_WORDS if number_words is None else number_words
    if not words or words[0] not in vocab:
        return None
    first = vocab[words[0]]
    best = (first, 1)
    if len(words) >= 2 and words[1] in vocab:
        second = vocab[words[1]]
        if 20 <= first <= 90 and first % 10 == 0 and 1 <= second <= 9:
            best = (first + second, 2)
        elif first == 1 and second == 100:
            best = (100, 2)
    return best


def parse_number_word(words: Sequence[str], number_words: Mapping[str, int] | None = None) -> int | None:
    """Parse normalized words into a mark value 0-100, or None.

    Each word may be hyphenated or glued; the longest valid prefix of
    the expanded word sequence wins.

    >>> parse_number_word(["SIXTY", "THREE"])
    63
    """
    vocab = NUMBER_WORDS if number_words is None else number_words
    expanded: list[str] = []
    for word in words:
        pieces = expand_number_token(word, vocab)
        if pieces is None:
            expanded.append(word)
        else:
            expanded.extend(pieces)
    parsed = parse_prefix(expanded, vocab)
    return parsed[0] if parsed else None
