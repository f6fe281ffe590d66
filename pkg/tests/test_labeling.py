import pytest
from hypothesis import assume, given, strategies as st

from emograd.labeling import dominant_emotion
from emograd.taxonomy import EMOTIONS


def test_unique_max_above_threshold():
    decision = dominant_emotion({"anger": 0.9, "joy": 0.1}, 0.5)
    assert decision.label == "anger"
    assert decision.top_score == 0.9
    assert decision.threshold == 0.5


def test_strictly_above_threshold_required():
    assert dominant_emotion({"anger": 0.5}, 0.5).label is None
    assert dominant_emotion({"anger": 0.5000001}, 0.5).label == "anger"


def test_tie_breaks_by_canonical_index():
    assert dominant_emotion({"anger": 0.6, "disgust": 0.6}, 0.5).label == "anger"
    assert dominant_emotion({"disgust": 0.6, "anger": 0.6}, 0.5).label == "anger"
    assert dominant_emotion({"neutral": 0.7, "admiration": 0.7}).label == "admiration"


def test_empty_scores_yield_no_label():
    decision = dominant_emotion({}, 0.5)
    assert decision.label is None
    assert decision.top_score == 0.0


def test_rejects_bad_inputs():
    with pytest.raises(ValueError):
        dominant_emotion({"anger": 0.9}, 1.5)
    with pytest.raises(ValueError):
        dominant_emotion({"anger": 1.2}, 0.5)
    with pytest.raises(ValueError):
        dominant_emotion({"fury": 0.9}, 0.5)


scores_strategy = st.dictionaries(
    st.sampled_from(EMOTIONS), st.floats(0.0, 1.0), min_size=1, max_size=8
)


@given(scores_strategy, st.floats(0.01, 1.0))
def test_scale_free_argmax(scores, scale):
    top = max(scores.values())
    below = [v for v in scores.values() if v != top]
    # scaling must not collapse a strictly-lower score onto the maximum
    assume(not below or max(below) * scale < top * scale)
    base = dominant_emotion(scores, 0.0)
    scaled = dominant_emotion({e: c * scale for e, c in scores.items()}, 0.0)
    if base.top_score > 0:
        assert base.label == scaled.label


@given(scores_strategy, st.floats(0.0, 1.0), st.floats(0.0, 1.0))
def test_threshold_monotonicity(scores, low, high):
    if low > high:
        low, high = high, low
    at_low = dominant_emotion(scores, low)
    at_high = dominant_emotion(scores, high)
    if at_low.label is None:
        assert at_high.label is None
