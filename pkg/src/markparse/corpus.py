"""Deterministic synthetic marksheet corpus for the evaluation harness.

Real certificate scans cannot be redistributed, so the bundled corpus is
synthetic: 20 token dumps over the seven state templates, with injected
damage of the kinds the post-processing stage exists to repair
(single-character substitutions, glued words) plus distractor numerals
above 100 (years, roll numbers). Generation is fully seeded; the
packaged files under data/corpus/ can be regenerated byte-identically
with ``python -m markparse.corpus``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path
from string import ascii_uppercase

from .lexicon import Lexicon, MatchConfig, correct_subject, default_lexicon
from .numwords import NUMBER_WORDS
from .text import normalize

DEFAULT_SEED = 100463

_HEADERS = {
    "Bihar": "BIHAR SCHOOL EXAMINATION BOARD PATNA",
    "Delhi": "BOARD OF SECONDARY EDUCATION DELHI",
    "Gujarat": "GUJARAT SECONDARY AND HIGHER SECONDARY EDUCATION BOARD",
    "Haryana": "BOARD OF SCHOOL EDUCATION HARYANA",
    "Jharkhand": "JHARKHAND ACADEMIC COUNCIL RANCHI",
    "Uttarakhand": "UTTARAKHAND BOARD OF SCHOOL EDUCATION",
    "Uttar Pradesh": "UTTAR PRADESH BOARD OF HIGH SCHOOL EDUCATION",
}

_SUBJECT_ROWS = {
    "Bihar": ["ENGLISH", "HINDI", "SANSKRIT", "SCIENCE", "SOCIAL SCIENCE"],
    "Delhi": ["ENGLISH", "HINDI", "MATHS", "SCIENCE", "SOCIAL SCIENCE"],
    "Gujarat": ["ENGLISH", "LANGUAGE", "MATHS", "SCIENCE", "SOCIAL SCIENCE"],
    "Haryana": ["ENGLISH", "HINDI", "MATHS", "SCIENCE", "PHYSICAL EDUCATION"],
    "Jharkhand": ["ENGLISH", "HINDI", "MATHS", "SCIENCE", "SOCIAL SCIENCE"],
    "Uttarakhand": ["ENGLISH", "HINDI", "MATHS", "SCIENCE", "SANSKRIT"],
    "Uttar Pradesh": ["ENGLISH", "HINDI", "MATHS", "SCIENCE", "SOCIAL SCIENCE"],
}

_VALUE_TO_WORDS = {value: word for word, value in NUMBER_WORDS.items() if value != 100}


def words_for_value(value: int) -> list[str]:
    """Canonical English words for a value 0-100."""
    if not 0 <= value <= 100:
        raise ValueError("value must be within 0-100")
    if value == 100:
        return ["ONE", "HUNDRED"]
    if value in _VALUE_TO_WORDS:
        return [_VALUE_TO_WORDS[value]]
    tens, unit = divmod(value, 10)
    return [_VALUE_TO_WORDS[tens * 10], _VALUE_TO_WORDS[unit]]


@dataclass
class CorpusDoc:
    """One synthetic document: its dump, gold marks, and damage profile."""

    source_id: str
    state: str
    dump: dict
    gold: dict[str, int]
    recoverable_corruptions: int = 0
    unrecoverable_corruptions: int = 0


class _RowBuilder:
    """Accumulates tokens for one document, row by row."""

    def __init__(self, rng: random.Random, jitter: bool = True):
        self.rng = rng
        self.jitter = jitter
        self.tokens: list[dict] = []

    def add(self, text: str, x: float, y: float, confidence: float, height: float = 24.0) -> float:
        width = max(12.0, 14.0 * len(text))
        jitter = self.rng.randint(-6, 6) if self.jitter else 0
        top = y - height / 2 + jitter
        self.tokens.append({
            "polygon": [[x, top], [x + width, top], [x + width, top + height], [x, top + height]],
            "text": text,
            "confidence": round(confidence, 4),
        })
        return x + width + 22.0

    def add_words(self, words: list[str], x: float, y: float, confidence: float) -> float:
        for word in words:
            x = self.add(word, x, y, confidence)
        return x


def _build_document(
    source_id: str,
    state: str,
    rng: random.Random,
    substitute_subjects: tuple[str, ...] = (),
    merge_subjects: tuple[str, ...] = (),
    garbage_subjects: tuple[str, ...] = (),
    distractors: bool = False,
    numerals_only: bool = False,
    lexicon: Lexicon | None = None,
) -> CorpusDoc:
    lexicon = lexicon or default_lexicon()
    entries = lexicon.subjects_for(state)
    builder = _RowBuilder(rng)

    x = 50.0
    for word in _HEADERS[state].split():
        x = builder.add(word, x, 80.0, rng.uniform(0.88, 0.98))

    gold: dict[str, int] = {}
    recoverable = 0
    unrecoverable = 0
    row_y = 200.0
    for row_i, subject in enumerate(_SUBJECT_ROWS[state]):
        total = rng.randint(35, 95)
        practical = rng.randint(3, 9)
        theory = total - practical
        gold[subject] = total

        subject_words = subject.split()
        if subject in garbage_subjects:
            subject_words = [_garbage_word(rng, entries)]
            unrecoverable += 1
        elif subject in merge_subjects:
            subject_words = ["".join(subject_words)]
            recoverable += 1
        elif subject in substitute_subjects:
            subject_words = [_substitute_char(subject_words[0], rng, entries, subject)] + subject_words[1:]
            recoverable += 1

        x = builder.add_words(subject_words, 40.0, row_y, rng.uniform(0.93, 0.99))
        if distractors and row_i == 1:
            x = builder.add("2019", x, row_y, rng.uniform(0.9, 0.98))
        if not numerals_only:
            x = builder.add("100", 330.0, row_y, rng.uniform(0.93, 0.99))
        x = builder.add(f"{theory:03d}", 410.0, row_y, rng.uniform(0.93, 0.99))
        x = builder.add(f"{practical:03d}", 490.0, row_y, rng.uniform(0.93, 0.99))
        x = builder.add(f"{total:03d}", 570.0, row_y, rng.uniform(0.93, 0.99))
        if distractors and row_i == 3:
            x = builder.add(str(rng.randint(100100, 999999)), x, row_y, rng.uniform(0.9, 0.98))
        if not numerals_only:
            builder.add_words(words_for_value(total), 660.0, row_y, rng.uniform(0.88, 0.97))
        row_y += 60.0

    dump = {"source_id": source_id, "page": 1, "tokens": builder.tokens}
    return CorpusDoc(
        source_id=source_id,
        state=state,
        dump=dump,
        gold=gold,
        recoverable_corruptions=recoverable,
        unrecoverable_corruptions=unrecoverable,
    )


def _substitute_char(word: str, rng: random.Random, entries, canonical: str) -> str:
    """Damage one character such that fuzzy matching still recovers it."""
    fuzzy = MatchConfig()
    alias_set = {normalize(n) for e in entries for n in e.names()}
    for _ in range(100):
        pos = rng.randrange(len(word))
        letter = rng.choice(ascii_uppercase)
        if letter == word[pos]:
            continue
        damaged = word[:pos] + letter + word[pos + 1:]
        if damaged in alias_set:
            continue
        hit = correct_subject([damaged], entries, fuzzy)
        if hit and hit[0] == canonical and hit[1] < 1.0:
            return damaged
    raise RuntimeError(f"could not build a recoverable corruption of {word!r}")


def _garbage_word(rng: random.Random, entries) -> str:
    """A token no alias comes close to, so no version can match it."""
    fuzzy = MatchConfig()
    for _ in range(100):
        word = "".join(rng.choice("QXZJVWK") for _ in range(6))
        if correct_subject([word], entries, fuzzy) is None:
            return word
    raise RuntimeError("could not build an unmatchable token")


def make_gujarat_sample() -> dict:
    """The bundled five-subject sample dump (state header + marks rows).

    Rows carry max-mark, theory, practical and total numeral columns plus
    the total in words; the expected extraction is English 63,
    Language 77, Social Science 63, Science 62, Maths 40.
    """
    rows = [
        ("ENGLISH", 57, 6, 63),
        ("LANGUAGE", 70, 7, 77),
        ("SOCIAL SCIENCE", 57, 6, 63),
        ("SCIENCE", 55, 7, 62),
        ("MATHS", 36, 4, 40),
    ]
    builder = _RowBuilder(random.Random(1), jitter=False)

    x = 60.0
    for word in _HEADERS["Gujarat"].split():
        x = builder.add(word, x, 80.0, 0.92)

    row_y = 200.0
    for subject, theory, practical, total in rows:
        x = 40.0
        for word in subject.split():
            x = builder.add(word, x, row_y, 0.97)
        builder.add("100", 330.0, row_y, 0.96)
        builder.add(f"{theory:03d}", 410.0, row_y, 0.95)
        builder.add(f"{practical:03d}", 490.0, row_y, 0.95)
        builder.add(f"{total:03d}", 570.0, row_y, 0.95)
        builder.add_words(words_for_value(total), 660.0, row_y, 0.9)
        row_y += 60.0

    return {"source_id": "gujarat-sample", "page": 1, "tokens": builder.tokens}


def build_synthetic_corpus(seed: int = DEFAULT_SEED, lexicon: Lexicon | None = None) -> list[CorpusDoc]:
    """Build the 20-document corpus.

    Eight documents are clean, six carry two recoverable corruptions
    (one substitution, one glued subject), four carry one recoverable
    corruption, and two carry one unrecoverable garbage subject. The
    exact-only baseline therefore lands at 4-5 bucket 70% while the
    full post-processing run recovers every damaged subject.
    """
    lexicon = lexicon or default_lexicon()
    plans = [
        ("Bihar", {}),
        ("Delhi", {}),
        ("Gujarat", {}),
        ("Haryana", {}),
        ("Jharkhand", {"numerals_only": True}),
        ("Uttarakhand", {"numerals_only": True}),
        ("Uttar Pradesh", {"distractors": True}),
        ("Uttar Pradesh", {"distractors": True}),
        ("Delhi", {"substitute_subjects": ("ENGLISH",), "merge_subjects": ("SOCIAL SCIENCE",)}),
        ("Gujarat", {"substitute_subjects": ("SCIENCE",), "merge_subjects": ("SOCIAL SCIENCE",)}),
        ("Haryana", {"substitute_subjects": ("MATHS",), "merge_subjects": ("PHYSICAL EDUCATION",)}),
        ("Jharkhand", {"substitute_subjects": ("HINDI",), "merge_subjects": ("SOCIAL SCIENCE",)}),
        ("Uttar Pradesh", {"substitute_subjects": ("ENGLISH",), "merge_subjects": ("SOCIAL SCIENCE",)}),
        ("Bihar", {"substitute_subjects": ("SANSKRIT",), "merge_subjects": ("SOCIAL SCIENCE",)}),
        ("Delhi", {"merge_subjects": ("SOCIAL SCIENCE",)}),
        ("Gujarat", {"substitute_subjects": ("ENGLISH",)}),
        ("Uttarakhand", {"substitute_subjects": ("SCIENCE",)}),
        ("Haryana", {"merge_subjects": ("PHYSICAL EDUCATION",), "distractors": True}),
        ("Uttar Pradesh", {"garbage_subjects": ("SOCIAL SCIENCE",)}),
        ("Bihar", {"garbage_subjects": ("SANSKRIT",)}),
    ]
    docs = []
    for i, (state, options) in enumerate(plans):
        rng = random.Random(seed + i)
        slug = state.lower().replace(" ", "-")
        docs.append(_build_document(
            source_id=f"{slug}-{i:03d}",
            state=state,
            rng=rng,
            lexicon=lexicon,
            **options,
        ))
    return docs


def write_corpus(directory: str | Path, seed: int = DEFAULT_SEED) -> tuple[list[Path], Path]:
    """Write corpus dumps and the combined gold file into a directory."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    docs = build_synthetic_corpus(seed)
    paths = []
    gold: dict[str, dict[str, int]] = {}
    for doc in docs:
        path = directory / f"{doc.source_id}.ocr.json"
        path.write_text(json.dumps(doc.dump, indent=1) + "\n", encoding="utf-8")
        paths.append(path)
        gold[doc.source_id] = doc.gold
    gold_path = directory / "corpus.gold.json"
    gold_path.write_text(json.dumps(gold, indent=1, sort_keys=True) + "\n", encoding="utf-8")
    return paths, gold_path


def _main() -> None:
    import argparse

    parser = argparse.ArgumentParser(description="regenerate the bundled fixtures")
    parser.add_argument("--dir", default=str(Path(__file__).parent / "data"))
    args = parser.parse_args()
    data_dir = Path(args.dir)
    write_corpus(data_dir / "corpus")
    sample = make_gujarat_sample()
    (data_dir / "gujarat_sample.ocr.json").write_text(
        json.dumps(sample, indent=1) + "\n", encoding="utf-8"
    )
    print(f"fixtures written under {data_dir}")


if __name__ == "__main__":
    _main()
