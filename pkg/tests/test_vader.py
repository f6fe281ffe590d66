import json
import os

import pytest
from hypothesis import given, strategies as st

from emograd import vader
from emograd.vader import (
    LexiconError,
    PolarityScores,
    SentimentLexicon,
    default_lexicon,
    load_valences,
    median_by_emotion,
    score_text,
)

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures", "vader_fixtures.json")


@pytest.fixture(scope="module")
def lexicon():
    return default_lexicon()


def load_fixtures():
    with open(FIXTURES, encoding="utf-8") as fh:
        return json.load(fh)


def test_fixture_count():
    assert len(load_fixtures()) >= 20


@pytest.mark.parametrize(
    "case", load_fixtures(), ids=lambda c: c["text"][:40].replace(" ", "_")
)
def test_fixture_compounds(lexicon, case):
    got = score_text(lexicon, case["text"])
    assert got.compound == pytest.approx(case["compound"], abs=1e-4)


def test_empty_text_is_neutral(lexicon):
    scores = score_text(lexicon, "")
    assert scores == PolarityScores(neg=0.0, neu=1.0, pos=0.0, compound=0.0)


def test_no_lexicon_hit_is_neutral(lexicon):
    scores = score_text(lexicon, "zorb flibble quux")
    assert scores.compound == 0.0
    assert scores.neu == 1.0


def test_shares_sum_to_one(lexicon):
    for text in ("good", "not bad at all", "Today SUX!", "plain words only", ""):
        s = score_text(lexicon, text)
        assert s.neg + s.neu + s.pos == pytest.approx(1.0, abs=1e-6)
        assert -1.0 <= s.compound <= 1.0


def test_exclamation_monotonicity(lexicon):
    # up to four '!' never decrease a positive sentence's compound
    compounds = [
        score_text(lexicon, "The book was good" + "!" * k).compound for k in range(5)
    ]
    assert all(b >= a for a, b in zip(compounds, compounds[1:]))
    # a fifth '!' adds nothing beyond the cap
    assert score_text(lexicon, "The book was good" + "!" * 5).compound == compounds[4]


def test_negation_flips_sign(lexicon):
    for token in ("good", "great", "happy"):
        positive = score_text(lexicon, f"{token}").compound
        negated = score_text(lexicon, f"not {token}").compound
        assert positive > 0
        assert negated < 0


def test_booster_monotonicity(lexicon):
    plain = score_text(lexicon, "good").compound
    boosted = score_text(lexicon, "very good").compound
    dampened = score_text(lexicon, "barely good").compound
    assert boosted > plain > dampened > 0


def test_caps_emphasis_needs_mixed_case(lexicon):
    mixed = score_text(lexicon, "GOOD stuff").compound
    plain = score_text(lexicon, "good stuff").compound
    all_caps = score_text(lexicon, "GOOD STUFF").compound
    assert mixed > plain
    assert all_caps == plain


def test_special_idiom_overrides_token_valence():
    lex = SentimentLexicon(
        valences={"shit": -2.6},
        boosters={},
        negations=frozenset(),
        idioms={"the shit": 3.0},
    )
    assert score_text(lex, "that was the shit").compound > 0
    assert score_text(lex, "utter shit").compound < 0


def test_but_reweights_clauses(lexicon):
    # the clause after "but" dominates
    assert score_text(lexicon, "good but bad").compound < 0
    assert score_text(lexicon, "bad but good").compound > 0


@given(st.text(max_size=60))
def test_score_bounds_fuzz(text):
    s = score_text(default_lexicon(), text)
    assert -1.0 <= s.compound <= 1.0
    assert 0.0 <= min(s.neg, s.neu, s.pos) and max(s.neg, s.neu, s.pos) <= 1.0
    assert s.neg + s.neu + s.pos == pytest.approx(1.0, abs=1e-6)


def test_load_valences_rejects_malformed(tmp_path):
    path = tmp_path / "lex.txt"
    path.write_text("good\t1.9\nbroken line without tab\n", encoding="utf-8")
    with pytest.raises(LexiconError, match=":2"):
        load_valences(path)
    path.write_text("good\tnot-a-number\n", encoding="utf-8")
    with pytest.raises(LexiconError, match=":1"):
        load_valences(path)


def test_load_valences_ignores_extra_columns(tmp_path):
    path = tmp_path / "lex.txt"
    path.write_text("good\t1.9\t0.5\t[4,4,4]\n\nsux\t-1.5\n", encoding="utf-8")
    assert load_valences(path) == {"good": 1.9, "sux": -1.5}


def test_median_by_emotion_even_and_odd(lexicon):
    corpus = [
        ("good", "joy"),  # 0.4404
        ("bad", "joy"),  # -0.5423
        ("great", "anger"),
        ("good", "anger"),
        ("", "anger"),
    ]
    medians = median_by_emotion(corpus, lexicon)
    good = score_text(lexicon, "good").compound
    bad = score_text(lexicon, "bad").compound
    assert medians["joy"] == pytest.approx((good + bad) / 2)
    assert medians["anger"] == pytest.approx(good)
    assert "grief" not in medians


def test_median_by_emotion_empty(lexicon):
    assert median_by_emotion([], lexicon) == {}
    assert median_by_emotion([("", "neutral")], lexicon) == {"neutral": 0.0}
