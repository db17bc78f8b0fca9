"""State and subject lexicon matching.

Board certificates differ by state: the state name appears somewhere in
the header and decides which subject list applies. Matching runs on
normalized Levenshtein similarity so common OCR damage (substituted
characters, glued words) is recoverable:

- state detection tries word-level bigrams first, then single tokens,
  then falls back to "Other" with a generic subject list
- subject matching tries bigrams, then single tokens, then merged-word
  segmentation, keeping the first qualifying hit per line and at most
  one line per subject

The shipped lexicon (data/lexicon.json) covers seven state boards with
curated subject lists and aliases; it is a stand-in, not an official
roster, and can be replaced wholesale via its JSON schema.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Literal, Sequence

from .diagnostics import DUPLICATE_SUBJECT, Diagnostic
from .errors import InvalidParameter, LexiconError
from .layout import TextLine
from .numwords import NUMBER_WORDS
from .text import normalize, segment_word, similarity

OTHER_STATE = "Other"

MatchVia = Literal["exact", "bigram", "unigram", "spell-corrected", "segmented"]


@dataclass(frozen=True)
class SubjectEntry:
    """One canonical subject and the spellings that map to it."""

    canonical: str
    aliases: tuple[str, ...] = ()

    def names(self) -> tuple[str, ...]:
        return (self.canonical, *self.aliases)


@dataclass(frozen=True)
class MatchConfig:
    """Similarity thresholds and the merged-word segment cap."""

    state_threshold: float = 0.80
    subject_threshold: float = 0.80
    max_segments: int = 3

    def __post_init__(self):
        for name in ("state_threshold", "subject_threshold"):
            value = getattr(self, name)
            if not 0.0 < value <= 1.0:
                raise InvalidParameter(f"{name} must be in (0, 1]")
        if self.max_segments < 1:
            raise InvalidParameter("max_segments must be >= 1")

    @staticmethod
    def exact_only() -> "MatchConfig":
        """Exact alias matching: no spell correction, no segmentation."""
        return MatchConfig(state_threshold=1.0, subject_threshold=1.0, max_segments=1)


@dataclass(frozen=True)
class SubjectMatch:
    """A subject hit on one line.

    ``token_start``/``token_end`` delimit the matched tokens (half-open)
    within the line; mark candidates are scanned from ``token_end``.
    """

    canonical_subject: str
    line_index: int
    token_start: int
    token_end: int
    score: float
    via: MatchVia


class Lexicon:
    """Immutable state/subject/number-word vocabulary."""

    def __init__(
        self,
        states: Sequence[str],
        subjects_by_state: dict[str, Sequence[SubjectEntry]],
        default_subjects: Sequence[SubjectEntry],
        number_words: dict[str, int] | None = None,
    ):
        self.states = tuple(states)
        self.subjects_by_state = {s: tuple(v) for s, v in subjects_by_state.items()}
        self.default_subjects = tuple(default_subjects)
        self.number_words = dict(number_words) if number_words else dict(NUMBER_WORDS)
        self._validate()

    def _validate(self) -> None:
        normalized_states = [normalize(s) for s in self.states]
        if len(set(normalized_states)) != len(normalized_states):
            raise LexiconError("state names must be unique after normalization")
        if any(not s for s in normalized_states):
            raise LexiconError("state names must be non-empty")
        if not self.default_subjects:
            raise LexiconError("default subject list must be non-empty")
        for state, entries in self.subjects_by_state.items():
            if state not in self.states:
                raise LexiconError(f"subject list for unknown state: {state}")
            self._validate_entries(entries, state)
        self._validate_entries(self.default_subjects, OTHER_STATE)
        for word, value in self.number_words.items():
            if normalize(word) != word or not word:
                raise LexiconError(f"number word not normalized: {word!r}")
            if not isinstance(value, int) or not 0 <= value <= 100:
                raise LexiconError(f"number word value out of range: {word}={value}")

    @staticmethod
    def _validate_entries(entries: Sequence[SubjectEntry], scope: str) -> None:
        seen: dict[str, str] = {}
        for entry in entries:
            for name in entry.names():
                key = normalize(name)
                if not key:
                    raise LexiconError(f"{scope}: empty subject alias")
                owner = seen.get(key)
                if owner is not None and owner != entry.canonical:
                    raise LexiconError(
                        f"{scope}: alias {name!r} maps to both {owner!r} and {entry.canonical!r}"
                    )
                seen[key] = entry.canonical

    def subjects_for(self, state: str) -> tuple[SubjectEntry, ...]:
        """Subject list for a detected state; unknown states get defaults."""
        return self.subjects_by_state.get(state, self.default_subjects)

    def subject_vocabulary(self, state: str) -> list[str]:
        """Sorted unique words across the state's canonical names and aliases."""
        words = {
            word
            for entry in self.subjects_for(state)
            for name in entry.names()
            for word in normalize(name).split()
        }
        return sorted(words)


def _entries_from_json(raw: object, scope: str) -> list[SubjectEntry]:
    if not isinstance(raw, list):
        raise LexiconError(f"{scope}: subject list must be an array")
    entries = []
    for item in raw:
        if isinstance(item, str):
            entries.append(SubjectEntry(canonical=item))
        elif isinstance(item, dict) and isinstance(item.get("canonical"), str):
            aliases = item.get("aliases", [])
            if not isinstance(aliases, list) or any(not isinstance(a, str) for a in aliases):
                raise LexiconError(f"{scope}: aliases must be an array of strings")
            entries.append(SubjectEntry(canonical=item["canonical"], aliases=tuple(aliases)))
        else:
            raise LexiconError(f"{scope}: bad subject entry {item!r}")
    return entries


def load_lexicon(path: str | Path) -> Lexicon:
    """Load a lexicon JSON file (see data/lexicon.json for the schema)."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise LexiconError(f"cannot read lexicon {path}: {exc}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("states"), list):
        raise LexiconError("lexicon must be an object with a states array")
    states: list[str] = []
    subjects_by_state: dict[str, list[SubjectEntry]] = {}
    for state_doc in doc["states"]:
        if not isinstance(state_doc, dict) or not isinstance(state_doc.get("name"), str):
            raise LexiconError("each state needs a name")
        name = state_doc["name"]
        states.append(name)
        subjects_by_state[name] = _entries_from_json(state_doc.get("subjects", []), name)
    default_subjects = _entries_from_json(doc.get("default_subjects", []), "default_subjects")
    number_words = doc.get("number_words")
    if number_words is not None and not isinstance(number_words, dict):
        raise LexiconError("number_words must be an object")
    return Lexicon(
        states=states,
        subjects_by_state=subjects_by_state,
        default_subjects=default_subjects,
        number_words=number_words,
    )


def default_lexicon() -> Lexicon:
    """The packaged seven-state lexicon."""
    with resources.as_file(resources.files("markparse").joinpath("data/lexicon.json")) as path:
        return load_lexicon(path)


def detect_state(
    lines: Sequence[TextLine],
    lexicon: Lexicon,
    config: MatchConfig = MatchConfig(),
) -> str:
    """Detect the issuing state from grouped lines.

    Pass 1 scores every adjacent-token bigram against every state name,
    pass 2 every single token; the best hit at or above the threshold
    wins (higher score, then earlier line, then earlier token). With no
    hit the fallback state "Other" is returned.
    """
    targets = [(state, normalize(state)) for state in lexicon.states]
    line_texts = [[normalize(t.text) for t in line.tokens] for line in lines]

    def best_hit(candidates_of_line) -> tuple[float, int, int, str] | None:
        best: tuple[float, int, int, str] | None = None
        for line_i, texts in enumerate(line_texts):
            for token_j, candidate in candidates_of_line(texts):
                if not candidate:
                    continue
                for state, target in targets:
                    score = similarity(candidate, target)
                    if best is None or (score, -line_i, -token_j) > (best[0], -best[1], -best[2]):
                        best = (score, line_i, token_j, state)
        return best

    def bigrams(texts):
        for j in range(len(texts) - 1):
            if texts[j] and texts[j + 1]:
                yield j, f"{texts[j]} {texts[j + 1]}"

    def unigrams(texts):
        for j, text in enumerate(texts):
            yield j, text

    for candidates in (bigrams, unigrams):
        hit = best_hit(candidates)
        if hit is not None and hit[0] >= config.state_threshold:
            return hit[3]
    return OTHER_STATE


def segment_merged(word: str, vocabulary: Sequence[str], config: MatchConfig = MatchConfig()) -> list[str]:
    """Split a glued word into vocabulary words (see text.segment_word)."""
    return segment_word(word, vocabulary, config.subject_threshold, config.max_segments)


def correct_subject(
    words: Sequence[str],
    subjects: Sequence[SubjectEntry],
    config: MatchConfig = MatchConfig(),
) -> tuple[str, float] | None:
    """Best canonical subject for the joined words, or None below threshold."""
    joined = " ".join(words)
    best: tuple[float, int, int] | None = None
    best_canonical = ""
    for entry_i, entry in enumerate(subjects):
        for alias_j, alias in enumerate(entry.names()):
            score = similarity(joined, normalize(alias))
            key = (score, -entry_i, -alias_j)
            if best is None or key > best:
                best = key
                best_canonical = entry.canonical
    if best is None or best[0] < config.subject_threshold:
        return None
    return best_canonical, best[0]


def match_subjects(
    lines: Sequence[TextLine],
    state: str,
    lexicon: Lexicon,
    config: MatchConfig = MatchConfig(),
) -> tuple[list[SubjectMatch], list[Diagnostic]]:
    """Find at most one subject per line, at most one line per subject.

    Per line the passes run in order: adjacent-token bigrams, then
    single tokens. Long space-less tokens are segmented over the
    subject vocabulary before single-token matching, so glued words
    ("SOCIALSCIENCE") resolve through their split rather than a lucky
    whole-string similarity; the shortest-split rule keeps intact words
    whole. The first qualifying hit per line wins, and a subject already
    matched on an earlier line is skipped with a duplicate-subject
    diagnostic.
    """
    entries = lexicon.subjects_for(state)
    vocabulary = lexicon.subject_vocabulary(state)
    matches: list[SubjectMatch] = []
    diagnostics: list[Diagnostic] = []
    matched_subjects: set[str] = set()

    for line_i, line in enumerate(lines):
        texts = [normalize(t.text) for t in line.tokens]
        found: SubjectMatch | None = None

        for j in range(len(texts) - 1):
            if not texts[j] or not texts[j + 1]:
                continue
            hit = correct_subject([texts[j], texts[j + 1]], entries, config)
            if hit:
                via: MatchVia = "exact" if hit[1] == 1.0 else "bigram"
                found = SubjectMatch(hit[0], line_i, j, j + 2, hit[1], via)
                break

        if found is None:
            for j, text in enumerate(texts):
                if not text:
                    continue
                if config.max_segments > 1 and len(text) >= 6 and " " not in text:
                    parts = segment_merged(text, vocabulary, config)
                    if len(parts) > 1:
                        hit = correct_subject(parts, entries, config)
                        if hit:
                            found = SubjectMatch(hit[0], line_i, j, j + 1, hit[1], "segmented")
                            break
                hit = correct_subject([text], entries, config)
                if hit:
                    via = "exact" if hit[1] == 1.0 else "spell-corrected"
                    found = SubjectMatch(hit[0], line_i, j, j + 1, hit[1], via)
                    break

        if found is None:
            continue
        if found.canonical_subject in matched_subjects:
            diagnostics.append(Diagnostic(
                kind=DUPLICATE_SUBJECT,
                message=f"subject {found.canonical_subject!r} already matched; line {line_i} ignored",
                detail={"subject": found.canonical_subject, "line_index": line_i},
            ))
            continue
        matched_subjects.add(found.canonical_subject)
        matches.append(found)

    return matches, diagnostics
