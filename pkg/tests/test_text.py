"""Normalization, similarity (against an independent DP oracle), segmentation."""

from __future__ import annotations

from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from markparse.text import best_vocabulary_score, levenshtein, normalize, segment_word, similarity


class TestNormalize:
    def test_strips_punctuation_and_uppercases(self):
        assert normalize("Social Science *") == "SOCIAL SCIENCE"

    def test_fixed_point(self):
        assert normalize("GUJARAT") == "GUJARAT"

    def test_em_dash_becomes_space(self):
        assert normalize("  maths—040 ") == "MATHS 040"

    def test_hyphen_kept(self):
        assert normalize("SIXTY-THREE") == "SIXTY-THREE"

    def test_empty(self):
        assert normalize("  \t ") == ""


def levenshtein_oracle(a: str, b: str) -> int:
    """Full-matrix DP, written independently of the production two-row form."""
    rows = len(a) + 1
    cols = len(b) + 1
    table = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        table[i][0] = i
    for j in range(cols):
        table[0][j] = j
    for i in range(1, rows):
        for j in range(1, cols):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            table[i][j] = min(
                table[i - 1][j] + 1,
                table[i][j - 1] + 1,
                table[i - 1][j - 1] + cost,
            )
    return table[-1][-1]


class TestSimilarity:
    def test_identical(self):
        assert similarity("ENGLISH", "ENGLISH") == 1.0

    def test_one_edit_in_seven(self):
        assert abs(similarity("GUJRAT", "GUJARAT") - (1 - 1 / 7)) < 1e-12

    def test_disjoint(self):
        assert similarity("ABC", "XYZ") == 0.0

    def test_both_empty(self):
        assert similarity("", "") == 1.0

    @given(st.text(max_size=12), st.text(max_size=12))
    @settings(max_examples=300)
    def test_matches_oracle(self, a, b):
        assert levenshtein(a, b) == levenshtein_oracle(a, b)

    @given(st.text(max_size=10), st.text(max_size=10))
    def test_symmetric_and_bounded(self, a, b):
        s = similarity(a, b)
        assert s == similarity(b, a)
        assert 0.0 <= s <= 1.0


def segment_oracle(word, vocabulary, threshold, max_segments):
    """Exhaustive enumeration of all splits, mirroring the stated rules."""
    best = None  # (parts_count, -mean, order) -> parts
    order = 0
    for parts_count in range(1, max_segments + 1):
        found = []
        for cuts in combinations(range(1, len(word)), parts_count - 1):
            bounds = (0, *cuts, len(word))
            parts = [word[bounds[i]:bounds[i + 1]] for i in range(parts_count)]
            scores = [max(similarity(p, v) for v in vocabulary) for p in parts]
            if min(scores) >= threshold:
                found.append((sum(scores) / parts_count, parts))
        if found:
            best_mean = max(m for m, _ in found)
            for mean, parts in found:
                if mean == best_mean:
                    return parts
    return [word]


GUJARAT_VOCAB = [
    "AND", "BASIC", "EDUCATION", "ENGLISH", "FIRST", "LANGUAGE",
    "MATHEMATICS", "MATHS", "PHYSICAL", "SCIENCE", "SOCIAL", "STUDIES", "TECHNOLOGY",
]


class TestSegmentWord:
    def test_glued_subject_splits(self):
        got = segment_word("SOCIALSCIENCE", GUJARAT_VOCAB, 0.8, 3)
        assert got == ["SOCIAL", "SCIENCE"]
        assert got == segment_oracle("SOCIALSCIENCE", GUJARAT_VOCAB, 0.8, 3)

    def test_intact_word_stays_whole(self):
        assert segment_word("ENGLISH", GUJARAT_VOCAB, 0.8, 3) == ["ENGLISH"]

    def test_unsplittable_returned_unchanged(self):
        assert segment_word("XQZPTV", GUJARAT_VOCAB, 0.8, 3) == ["XQZPTV"]

    def test_three_part_split(self):
        vocab = ["ONE", "TWO", "SIX"]
        assert segment_word("ONETWOSIX", vocab, 1.0, 3) == ["ONE", "TWO", "SIX"]

    @given(st.text(alphabet="ABCDEFGHIS", min_size=1, max_size=10))
    @settings(max_examples=60)
    def test_matches_exhaustive_oracle(self, word):
        got = segment_word(word, GUJARAT_VOCAB, 0.8, 3)
        assert got == segment_oracle(word, GUJARAT_VOCAB, 0.8, 3)

    @given(st.text(alphabet="ACEILNOS", min_size=1, max_size=12))
    @settings(max_examples=60)
    def test_split_preserves_length(self, word):
        parts = segment_word(word, GUJARAT_VOCAB, 0.8, 3)
        assert "".join(parts) == word


def test_best_vocabulary_score_empty_vocab():
    assert best_vocabulary_score("WORD", []) == 0.0
