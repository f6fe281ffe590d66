"""Dominance-threshold labeling of classifier score vectors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from . import taxonomy


@dataclass(frozen=True)
class LabelDecision:
    label: Optional[str]
    top_score: float
    threshold: float


def dominant_emotion(scores: Mapping[str, float], threshold: float = 0.5) -> LabelDecision:
    """Label with the single dominant emotion, or nothing.

    The maximum-confidence emotion is reported only when its confidence is
    strictly above the threshold; ties on the maximum go to the lowest
    canonical index. An empty score mapping yields no label.
    """
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must be in [0, 1], got {threshold}")
    best_label = None
    best_score = 0.0
    for emotion, confidence in scores.items():
        index = taxonomy.emotion_index(emotion)
        if not 0.0 <= confidence <= 1.0:
            raise ValueError(f"confidence for {emotion} out of [0, 1]: {confidence}")
        if best_label is None or confidence > best_score or (
            confidence == best_score and index < taxonomy.emotion_index(best_label)
        ):
            best_label = emotion
            best_score = confidence
    if best_label is None or best_score <= threshold:
        return LabelDecision(label=None, top_score=best_score, threshold=threshold)
    return LabelDecision(label=best_label, top_score=best_score, threshold=threshold)
