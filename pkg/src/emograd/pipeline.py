"""Dataset reconstruction: labeling join, transition filtering, intensity
orientation, splitting, few-shot capping, prefixing, and statistics."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from enum import Enum
from typing import Mapping, NamedTuple, Optional, Sequence

from . import taxonomy
from .labeling import LabelDecision
from .taxonomy import NEUTRAL, SentimentRange, TransitionGraph

SOURCES = ("paws", "mrpc", "quora", "other")


class PipelineError(ValueError):
    pass


def _check_text(field: str, value: str) -> None:
    if not value.strip():
        raise PipelineError(f"{field} must be non-empty")
    if any(ch in value for ch in "\t\n\r"):
        raise PipelineError(f"{field} must not contain tabs or line breaks")


@dataclass(frozen=True)
class ParaphrasePair:
    id: str
    input_text: str
    target_text: str
    source: str = "other"

    def __post_init__(self):
        if not self.id:
            raise PipelineError("pair id must be non-empty")
        _check_text("input_text", self.input_text)
        _check_text("target_text", self.target_text)
        if self.source not in SOURCES:
            raise PipelineError(f"unknown source tag: {self.source!r}")


@dataclass(frozen=True)
class LabeledPair:
    id: str
    input_text: str
    target_text: str
    source: str
    input_emotion: str
    target_emotion: str

    def __post_init__(self):
        taxonomy.emotion_index(self.input_emotion)
        taxonomy.emotion_index(self.target_emotion)

    @property
    def input_range(self) -> SentimentRange:
        return taxonomy.range_of(self.input_emotion)

    @property
    def target_range(self) -> SentimentRange:
        return taxonomy.range_of(self.target_emotion)

    @property
    def transition(self) -> tuple[str, str]:
        """Transition key (input emotion, target emotion) used for capping."""
        return (self.input_emotion, self.target_emotion)


class Rejection(NamedTuple):
    id: str
    reason: str  # "unlabeled" or "missing-scores"


def join_labels(
    pairs: Sequence[ParaphrasePair],
    input_decisions: Mapping[str, LabelDecision],
    target_decisions: Mapping[str, LabelDecision],
) -> tuple[list[LabeledPair], list[Rejection]]:
    """Attach label decisions to pairs; pairs without a label on both sides
    are rejected with a reason."""
    labeled = []
    rejected = []
    for pair in pairs:
        if pair.id not in input_decisions or pair.id not in target_decisions:
            rejected.append(Rejection(pair.id, "missing-scores"))
            continue
        input_label = input_decisions[pair.id].label
        target_label = target_decisions[pair.id].label
        if input_label is None or target_label is None:
            rejected.append(Rejection(pair.id, "unlabeled"))
            continue
        labeled.append(
            LabeledPair(
                id=pair.id,
                input_text=pair.input_text,
                target_text=pair.target_text,
                source=pair.source,
                input_emotion=input_label,
                target_emotion=target_label,
            )
        )
    return labeled, rejected


def filter_transitions(pairs: Sequence[LabeledPair]) -> list[LabeledPair]:
    """Keep pairs that actually transition: distinct emotions, neither neutral."""
    return [
        p
        for p in pairs
        if p.input_emotion != p.target_emotion
        and p.input_emotion != NEUTRAL
        and p.target_emotion != NEUTRAL
    ]


def _intensity(pair_side_emotion: str, order: str) -> float:
    if order == "tier":
        return taxonomy.tier_of(pair_side_emotion)
    if order == "median":
        return abs(taxonomy.median_score(pair_side_emotion))
    raise PipelineError(f"unknown intensity order: {order!r}")


def orient_lowering(pairs: Sequence[LabeledPair], order: str = "tier") -> list[LabeledPair]:
    """Orient every pair so intensity strictly decreases, flipping texts and
    emotions where it increases; equal-intensity pairs are dropped."""
    oriented = []
    for pair in pairs:
        down = _intensity(pair.input_emotion, order)
        up = _intensity(pair.target_emotion, order)
        if down > up:
            oriented.append(pair)
        elif down < up:
            oriented.append(
                replace(
                    pair,
                    input_text=pair.target_text,
                    target_text=pair.input_text,
                    input_emotion=pair.target_emotion,
                    target_emotion=pair.input_emotion,
                )
            )
    return oriented


def graph_valid_only(
    pairs: Sequence[LabeledPair], graph: TransitionGraph
) -> list[LabeledPair]:
    """Restrict to pairs whose transition is an edge of the lowering graph."""
    return [p for p in pairs if graph.has_edge(p.input_emotion, p.target_emotion)]


def split(
    pairs: Sequence[LabeledPair], train_fraction: float = 0.8, seed: int = 42
) -> tuple[list[LabeledPair], list[LabeledPair]]:
    """Seeded-shuffle split; the first floor(n * fraction) pairs form train."""
    if not 0.0 < train_fraction < 1.0:
        raise PipelineError(f"train_fraction must be in (0, 1), got {train_fraction}")
    shuffled = list(pairs)
    random.Random(seed).shuffle(shuffled)
    cut = math.floor(len(shuffled) * train_fraction)
    return shuffled[:cut], shuffled[cut:]


def _cap(pairs: Sequence[LabeledPair], cap: int) -> list[LabeledPair]:
    seen: dict[tuple[str, str], int] = {}
    kept = []
    for pair in pairs:
        count = seen.get(pair.transition, 0)
        if count < cap:
            kept.append(pair)
            seen[pair.transition] = count + 1
    return kept


def cap_few_shot(
    train: Sequence[LabeledPair],
    test: Sequence[LabeledPair],
    cap_train: int = 12,
    cap_test: int = 3,
) -> tuple[list[LabeledPair], list[LabeledPair]]:
    """Keep the first N occurrences of each emotion transition per split."""
    if cap_train < 0 or cap_test < 0:
        raise PipelineError("caps must be >= 0")
    return _cap(train, cap_train), _cap(test, cap_test)


class PrefixStyle(Enum):
    FINE_GRAINED = "fine"
    SENTIMENT_RANGE = "range"


@dataclass(frozen=True)
class PrefixedExample:
    style: PrefixStyle
    prefix: str
    input_text: str
    target_text: str

    @property
    def model_input(self) -> str:
        return self.prefix + self.input_text


def make_prefix(pair: LabeledPair, style: PrefixStyle) -> PrefixedExample:
    """Prepend the transition head: ``<e_i> to <e_f>: `` or range tokens."""
    if style is PrefixStyle.FINE_GRAINED:
        prefix = f"{pair.input_emotion} to {pair.target_emotion}: "
    else:
        prefix = f"{pair.input_range.token} to {pair.target_range.token}: "
    return PrefixedExample(
        style=style,
        prefix=prefix,
        input_text=pair.input_text,
        target_text=pair.target_text,
    )


class PrefixError(ValueError):
    def __init__(self, message: str, token: Optional[str] = None):
        super().__init__(message)
        self.token = token


def parse_prefix(text: str, style: Optional[PrefixStyle] = None):
    """Split a prefixed input back into (head_from, head_to, remainder).

    Returns emotion labels for fine-grained heads and SentimentRange values
    for range heads. With no style given, a head whose both tokens are range
    tokens parses as a range head ("neutral to neutral" is the one string
    both vocabularies share, and it reads as ranges).
    """
    head, sep, remainder = text.partition(": ")
    if not sep:
        raise PrefixError(f"no ': ' separator in {text!r}")
    parts = head.split(" to ")
    if len(parts) != 2:
        raise PrefixError(f"head {head!r} is not of the form '<from> to <to>'", token=head)
    a, b = parts

    range_tokens = {r.token for r in SentimentRange}
    if style in (None, PrefixStyle.SENTIMENT_RANGE) and a in range_tokens and b in range_tokens:
        return taxonomy.range_from_token(a), taxonomy.range_from_token(b), remainder
    if style is PrefixStyle.SENTIMENT_RANGE:
        bad = a if a not in range_tokens else b
        raise PrefixError(f"unknown range token {bad!r}", token=bad)
    if taxonomy.is_emotion(a) and taxonomy.is_emotion(b):
        return a, b, remainder
    bad = a if not taxonomy.is_emotion(a) else b
    raise PrefixError(f"unknown emotion token {bad!r}", token=bad)


@dataclass(frozen=True)
class DatasetStats:
    total_pairs: int
    transiting_with_neutral: int
    transiting_without_neutral: int
    intensity_lowering: int

    def __post_init__(self):
        ordered = (
            self.total_pairs,
            self.transiting_with_neutral,
            self.transiting_without_neutral,
            self.intensity_lowering,
        )
        if any(a < b for a, b in zip(ordered, ordered[1:])):
            raise PipelineError(f"stats counts must be non-increasing, got {ordered}")

    def to_dict(self) -> dict:
        return {
            "total_pairs": self.total_pairs,
            "emotion_transiting_with_neutral": self.transiting_with_neutral,
            "emotion_transiting_without_neutral": self.transiting_without_neutral,
            "sentiment_intensity_lowering": self.intensity_lowering,
        }


def compute_stats(
    pairs: Sequence[ParaphrasePair],
    labeled: Sequence[LabeledPair],
    lowered: Sequence[LabeledPair],
) -> DatasetStats:
    """Stage counts of one pipeline run (the dataset-statistics columns)."""
    transiting = [p for p in labeled if p.input_emotion != p.target_emotion]
    return DatasetStats(
        total_pairs=len(pairs),
        transiting_with_neutral=len(transiting),
        transiting_without_neutral=len(filter_transitions(labeled)),
        intensity_lowering=len(lowered),
    )


@dataclass(frozen=True)
class RetargetedPair:
    pair: LabeledPair
    retargeted: bool
    drawn_target: Optional[str]  # pre-fallback draw; None if nothing to draw


def retarget_case_study(
    pairs: Sequence[LabeledPair],
    graph: TransitionGraph,
    seed: int,
    fraction: float = 0.35,
) -> list[RetargetedPair]:
    """Re-select target emotions for a seeded ceil(fraction * n) subset.

    Each re-selected pair draws uniformly from the graph's lowering targets
    of its input emotion; a neutral draw keeps the original target emotion.
    Target texts are never touched, so paraphrase metrics stay comparable.
    """
    if not 0.0 <= fraction <= 1.0:
        raise PipelineError(f"fraction must be in [0, 1], got {fraction}")
    n = len(pairs)
    k = math.ceil(fraction * n)
    rng = random.Random(seed)
    chosen = set(rng.sample(range(n), k))
    out = []
    for index, pair in enumerate(pairs):
        if index not in chosen:
            out.append(RetargetedPair(pair, False, None))
            continue
        targets = taxonomy.lowering_targets(graph, pair.input_emotion)
        if not targets:
            out.append(RetargetedPair(pair, True, None))
            continue
        drawn = rng.choice(targets)
        if drawn == NEUTRAL:
            out.append(RetargetedPair(pair, True, drawn))
        else:
            out.append(RetargetedPair(replace(pair, target_emotion=drawn), True, drawn))
    return out
