"""Cardinal word parsing against an independently built 0-100 table."""

from __future__ import annotations

import random

import pytest

from markparse.numwords import NUMBER_WORDS, expand_number_token, parse_number_word

# Oracle table built from scratch: literal spellings, no reuse of the
# production vocabulary constants.
ORACLE_UNITS = "ZERO ONE TWO THREE FOUR FIVE SIX SEVEN EIGHT NINE".split()
ORACLE_TEENS = ("TEN ELEVEN TWELVE THIRTEEN FOURTEEN FIFTEEN SIXTEEN "
                "SEVENTEEN EIGHTEEN NINETEEN").split()
ORACLE_TENS = "TWENTY THIRTY FORTY FIFTY SIXTY SEVENTY EIGHTY NINETY".split()


def oracle_words(value: int) -> list[str]:
    if value < 10:
        return [ORACLE_UNITS[value]]
    if value < 20:
        return [ORACLE_TEENS[value - 10]]
    if value == 100:
        return ["ONE", "HUNDRED"]
    tens, unit = divmod(value, 10)
    words = [ORACLE_TENS[tens - 2]]
    if unit:
        words.append(ORACLE_UNITS[unit])
    return words


ALL_FORMS = set()
for v in range(101):
    words = oracle_words(v)
    ALL_FORMS.add(" ".join(words))
    ALL_FORMS.add("-".join(words))
    ALL_FORMS.add("".join(words))
ALL_FORMS.add("HUNDRED")


class TestParseNumberWord:
    @pytest.mark.parametrize("value", range(101))
    def test_all_values_space_separated(self, value):
        assert parse_number_word(oracle_words(value)) == value

    @pytest.mark.parametrize("value", [21, 35, 47, 63, 78, 99])
    def test_hyphenated(self, value):
        assert parse_number_word(["-".join(oracle_words(value))]) == value

    @pytest.mark.parametrize("value", [21, 35, 47, 63, 78, 99, 100])
    def test_glued(self, value):
        assert parse_number_word(["".join(oracle_words(value))]) == value

    def test_zero(self):
        assert parse_number_word(["ZERO"]) == 0

    def test_bare_hundred(self):
        assert parse_number_word(["HUNDRED"]) == 100

    def test_longest_prefix_wins(self):
        assert parse_number_word(["SIXTY", "THREE", "FIVE"]) == 63

    def test_grammar_caps_at_hundred(self):
        # TWO HUNDRED is not a valid cardinal here; the prefix TWO is
        assert parse_number_word(["TWO", "HUNDRED"]) == 2

    def test_teen_does_not_take_unit(self):
        assert parse_number_word(["NINETEEN", "THREE"]) == 19

    def test_unparseable(self):
        assert parse_number_word(["ROLL"]) is None
        assert parse_number_word([]) is None
        assert parse_number_word(["063"]) is None

    def test_rejects_random_non_numbers(self):
        rng = random.Random(977)
        rejected = 0
        while rejected < 50:
            word = "".join(rng.choice("ABCDEFGHIJKLMNOPQRSTUVWXYZ") for _ in range(rng.randint(4, 10)))
            if word in ALL_FORMS:
                continue
            assert parse_number_word([word]) is None, word
            rejected += 1


class TestExpandNumberToken:
    def test_plain_word(self):
        assert expand_number_token("SIXTY") == ["SIXTY"]

    def test_hyphen_split(self):
        assert expand_number_token("SIXTY-THREE") == ["SIXTY", "THREE"]

    def test_glued_split(self):
        assert expand_number_token("SIXTYTHREE") == ["SIXTY", "THREE"]

    def test_non_number(self):
        assert expand_number_token("ENGLISH") is None
        assert expand_number_token("") is None

    def test_vocabulary_is_complete(self):
        # every oracle spelling is reachable through the shipped vocabulary
        for value in range(101):
            for word in oracle_words(value):
                assert word in NUMBER_WORDS
