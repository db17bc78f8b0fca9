"""Text normalization and string-similarity primitives.

Every matching stage works on normalized text, so the rules live in one
place: uppercase, strip anything that is not a letter/digit/space/hyphen
(replaced by a space so glued fields still separate), collapse whitespace.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable, Sequence

_DISALLOWED = re.compile(r"[^A-Z0-9 \-]")
_WHITESPACE = re.compile(r"\s+")


def normalize(text: str) -> str:
    """Normalize raw OCR text for matching.

    >>> normalize("Social Science *")
    'SOCIAL SCIENCE'
    """
    cleaned = _DISALLOWED.sub(" ", text.upper())
    return _WHITESPACE.sub(" ", cleaned).strip()


def levenshtein(a: str, b: str) -> int:
    """Edit distance (insert/delete/substitute, unit costs)."""
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cost = 0 if ca == cb else 1
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost))
        prev = cur
    return prev[-1]


def similarity(a: str, b: str) -> float:
    """Normalized similarity: 1 - distance / longer length, in [0, 1].

    Two empty strings are identical (1.0).
    """
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - levenshtein(a, b) / longest


def best_vocabulary_score(part: str, vocabulary: Iterable[str]) -> float:
    """Highest similarity between ``part`` and any vocabulary word."""
    best = 0.0
    for word in vocabulary:
        score = similarity(part, word)
        if score > best:
            best = score
            if best == 1.0:
                break
    return best


def segment_word(
    word: str,
    vocabulary: Sequence[str],
    threshold: float,
    max_segments: int,
) -> list[str]:
    """Split a space-less word into vocabulary words.

    Returns the shortest split into at most ``max_segments`` contiguous
    parts where each part scores >= ``threshold`` against some vocabulary
    word. Among splits of the same length the highest mean similarity
    wins (first enumerated on a tie). If no split qualifies the word is
    returned unchanged as a single-element list.
    """
    if not word or not vocabulary:
        return [word]
    vocab = list(vocabulary)
    exact = set(vocab) if threshold >= 1.0 else None
    for parts_count in range(1, max_segments + 1):
        if parts_count > len(word):
            break
        best_split: list[str] | None = None
        best_mean = -1.0
        for cuts in combinations(range(1, len(word)), parts_count - 1):
            bounds = (0, *cuts, len(word))
            parts = [word[bounds[i]:bounds[i + 1]] for i in range(parts_count)]
            if exact is not None:
                # threshold 1.0 means similarity 1.0, i.e. set membership
                if all(p in exact for p in parts):
                    return parts
                continue
            scores = [best_vocabulary_score(p, vocab) for p in parts]
            if min(scores) < threshold:
                continue
            mean = sum(scores) / parts_count
            if mean > best_mean:
                best_mean = mean
                best_split = parts
        if best_split is not None:
            return best_split
    return [word]
