"""28-label emotion taxonomy, intensity grouping, and the lowering transition graph.

The tables here (cluster membership, median compound scores, five-way
intensity grouping) are the fixed data contract the rest of the toolkit is
built on. They are hard-coded on purpose: the grouping thresholds are kept
only as a cross-check that re-derives the range table from the medians.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

# Canonical label order: alphabetical, neutral last. Index in this tuple is
# the canonical index used for all deterministic tie-breaking and sorting.
EMOTIONS: tuple[str, ...] = (
    "admiration",
    "amusement",
    "anger",
    "annoyance",
    "approval",
    "caring",
    "confusion",
    "curiosity",
    "desire",
    "disappointment",
    "disapproval",
    "disgust",
    "embarrassment",
    "excitement",
    "fear",
    "gratitude",
    "grief",
    "joy",
    "love",
    "nervousness",
    "optimism",
    "pride",
    "realization",
    "relief",
    "remorse",
    "sadness",
    "surprise",
    "neutral",
)

NEUTRAL = "neutral"

_INDEX = {label: i for i, label in enumerate(EMOTIONS)}


class UnknownEmotionError(ValueError):
    """Raised when a label is not one of the 28 canonical emotions."""

    def __init__(self, label):
        super().__init__(f"unknown emotion label: {label!r}")
        self.label = label


def emotion_index(emotion: str) -> int:
    """Canonical index (0-27) of an emotion label."""
    try:
        return _INDEX[emotion]
    except KeyError:
        raise UnknownEmotionError(emotion) from None


def is_emotion(label: str) -> bool:
    return label in _INDEX


class SentimentRange(Enum):
    """Five-way sentiment-intensity grouping of the 28 emotions."""

    HIGH_NEG = "high_neg"
    LOW_NEG = "low_neg"
    NEUTRAL = "neutral"
    LOW_POS = "low_pos"
    HIGH_POS = "high_pos"

    @property
    def token(self) -> str:
        """Prefix token for this range (e.g. ``high_neg``)."""
        return self.value

    @property
    def tier(self) -> int:
        """Intensity magnitude: Neutral=0, Low=1, High=2."""
        return _RANGE_TIER[self]

    @property
    def polarity(self) -> int:
        """Sign of the range: -1 negative, 0 neutral, +1 positive."""
        return _RANGE_POLARITY[self]


_RANGE_TIER = {
    SentimentRange.HIGH_NEG: 2,
    SentimentRange.LOW_NEG: 1,
    SentimentRange.NEUTRAL: 0,
    SentimentRange.LOW_POS: 1,
    SentimentRange.HIGH_POS: 2,
}

_RANGE_POLARITY = {
    SentimentRange.HIGH_NEG: -1,
    SentimentRange.LOW_NEG: -1,
    SentimentRange.NEUTRAL: 0,
    SentimentRange.LOW_POS: 1,
    SentimentRange.HIGH_POS: 1,
}

_RANGE_BY_TOKEN = {r.value: r for r in SentimentRange}


def range_from_token(token: str) -> SentimentRange:
    try:
        return _RANGE_BY_TOKEN[token]
    except KeyError:
        raise ValueError(f"unknown sentiment-range token: {token!r}") from None


# Eleven gradient clusters. Within a cluster, emotions are adjacent along a
# continuous gradient; lowering transitions stay inside one cluster.
CLUSTER_MEMBERS: dict[int, tuple[str, ...]] = {
    1: ("neutral",),
    2: ("amusement", "excitement", "joy", "love"),
    3: ("optimism", "desire", "caring"),
    4: ("pride", "admiration"),
    5: ("gratitude", "relief"),
    6: ("approval", "realization"),
    7: ("surprise", "curiosity", "confusion"),
    8: ("fear", "nervousness"),
    9: ("remorse", "embarrassment"),
    10: ("disappointment", "sadness", "grief"),
    11: ("disgust", "anger", "annoyance", "disapproval"),
}

_CLUSTER_OF = {
    member: cluster_id
    for cluster_id, members in CLUSTER_MEMBERS.items()
    for member in members
}

# Median compound score of each emotion's labeled texts (dimensionless,
# in [-1, 1]). All five zero-median emotions form the Neutral range.
MEDIAN_SCORES: dict[str, float] = {
    "grief": -0.5423,
    "anger": -0.5234,
    "disgust": -0.51805,
    "fear": -0.4404,
    "sadness": -0.4404,
    "nervousness": -0.3597,
    "disappointment": -0.3059,
    "annoyance": -0.296,
    "embarrassment": -0.26655,
    "remorse": -0.0772,
    "disapproval": -0.0644,
    "confusion": 0.0,
    "curiosity": 0.0,
    "realization": 0.0,
    "surprise": 0.0,
    "neutral": 0.0,
    "approval": 0.296,
    "caring": 0.3412,
    "desire": 0.4019,
    "relief": 0.4391,
    "amusement": 0.4404,
    "excitement": 0.4404,
    "pride": 0.4767,
    "optimism": 0.5081,
    "gratitude": 0.5574,
    "joy": 0.6008,
    "admiration": 0.6249,
    "love": 0.6369,
}

# Five-way grouping. Authoritative membership table; derive_range() below
# reproduces it from MEDIAN_SCORES as a consistency cross-check.
RANGE_MEMBERS: dict[SentimentRange, tuple[str, ...]] = {
    SentimentRange.HIGH_NEG: ("anger", "disgust", "grief", "fear", "sadness"),
    SentimentRange.LOW_NEG: (
        "nervousness",
        "annoyance",
        "disappointment",
        "embarrassment",
        "remorse",
        "disapproval",
    ),
    SentimentRange.NEUTRAL: (
        "confusion",
        "curiosity",
        "realization",
        "surprise",
        "neutral",
    ),
    SentimentRange.LOW_POS: ("approval", "caring", "desire", "relief"),
    SentimentRange.HIGH_POS: (
        "amusement",
        "excitement",
        "pride",
        "optimism",
        "gratitude",
        "joy",
        "admiration",
        "love",
    ),
}

_RANGE_OF = {
    member: rng for rng, members in RANGE_MEMBERS.items() for member in members
}

# |median| at or above this is a High range; separates sadness/fear (0.4404)
# and amusement (0.4404) from relief (0.4391) and nervousness (0.3597).
HIGH_TIER_THRESHOLD = 0.44


class EmotionCluster(NamedTuple):
    id: int
    members: tuple[str, ...]


def cluster_of(emotion: str) -> EmotionCluster:
    """The gradient cluster containing an emotion."""
    cluster_id = _CLUSTER_OF[_checked(emotion)]
    return EmotionCluster(cluster_id, CLUSTER_MEMBERS[cluster_id])


def range_of(emotion: str) -> SentimentRange:
    """Sentiment-intensity range of an emotion, per the authoritative table."""
    return _RANGE_OF[_checked(emotion)]


def median_score(emotion: str) -> float:
    """Median compound score of an emotion's labeled texts."""
    return MEDIAN_SCORES[_checked(emotion)]


def tier_of(emotion: str) -> int:
    return range_of(emotion).tier


def derive_range(median: float) -> SentimentRange:
    """Range implied by a median score alone (cross-check of the table)."""
    if median == 0:
        return SentimentRange.NEUTRAL
    high = abs(median) >= HIGH_TIER_THRESHOLD
    if median < 0:
        return SentimentRange.HIGH_NEG if high else SentimentRange.LOW_NEG
    return SentimentRange.HIGH_POS if high else SentimentRange.LOW_POS


def _checked(emotion: str) -> str:
    if emotion not in _INDEX:
        raise UnknownEmotionError(emotion)
    return emotion


@dataclass(frozen=True)
class TransitionEdge:
    source: str
    target: str
    source_cluster: int
    source_range: SentimentRange
    target_range: SentimentRange


class TransitionGraph:
    """Directed graph of allowed intensity-lowering emotion transitions.

    Out-neighbors are kept sorted by canonical index so sampling from the
    graph is reproducible across platforms.
    """

    def __init__(self, edges: list[TransitionEdge]):
        self.edges: tuple[TransitionEdge, ...] = tuple(
            sorted(edges, key=lambda e: (emotion_index(e.source), emotion_index(e.target)))
        )
        adjacency: dict[str, list[str]] = {e: [] for e in EMOTIONS}
        for edge in self.edges:
            adjacency[edge.source].append(edge.target)
        self._targets = {
            source: tuple(sorted(targets, key=emotion_index))
            for source, targets in adjacency.items()
        }

    def targets(self, emotion: str) -> tuple[str, ...]:
        return self._targets[_checked(emotion)]

    def has_edge(self, source: str, target: str) -> bool:
        return target in self._targets[_checked(source)]

    def __len__(self) -> int:
        return len(self.edges)


def build_transition_graph(include_cross_cluster: bool = False) -> TransitionGraph:
    """Construct the lowering graph from the cluster and range tables.

    Edges are (a -> b) for same-cluster pairs with strictly lower target
    tier, plus the universal (a -> neutral) edge for every non-neutral a.
    ``include_cross_cluster=True`` drops the same-cluster requirement.
    """
    edges = []
    for source in EMOTIONS:
        if source == NEUTRAL:
            continue
        source_cluster = _CLUSTER_OF[source]
        source_range = _RANGE_OF[source]
        for target in EMOTIONS:
            if target == source:
                continue
            same_cluster = _CLUSTER_OF[target] == source_cluster
            lower_tier = _RANGE_OF[target].tier < source_range.tier
            if target == NEUTRAL or (lower_tier and (same_cluster or include_cross_cluster)):
                edges.append(
                    TransitionEdge(
                        source=source,
                        target=target,
                        source_cluster=source_cluster,
                        source_range=source_range,
                        target_range=_RANGE_OF[target],
                    )
                )
    return TransitionGraph(edges)


def lowering_targets(graph: TransitionGraph, emotion: str) -> tuple[str, ...]:
    """Out-neighbors of an emotion, sorted by canonical index."""
    return graph.targets(emotion)


def select_target(
    graph: TransitionGraph,
    emotion: str,
    rng_seed: int,
    fallback: Optional[str] = None,
) -> Optional[str]:
    """Pick a lowering target uniformly at random, deterministically by seed.

    If the draw lands on neutral and a fallback is given, the fallback is
    returned instead (the re-targeting rule: a neutral draw keeps the
    original target). Returns None when there is nothing to draw from and
    no fallback was given.
    """
    if fallback is not None:
        _checked(fallback)
    targets = graph.targets(emotion)
    if not targets:
        return fallback
    chosen = random.Random(rng_seed).choice(targets)
    if chosen == NEUTRAL and fallback is not None:
        return fallback
    return chosen


def export_taxonomy(graph: Optional[TransitionGraph] = None) -> dict:
    """Single-document JSON view of the taxonomy for audit."""
    if graph is None:
        graph = build_transition_graph()
    return {
        "emotions": [
            {
                "label": e,
                "index": i,
                "cluster": _CLUSTER_OF[e],
                "range": _RANGE_OF[e].token,
                "median_score": MEDIAN_SCORES[e],
            }
            for i, e in enumerate(EMOTIONS)
        ],
        "clusters": {str(cid): list(members) for cid, members in CLUSTER_MEMBERS.items()},
        "ranges": {rng.token: list(members) for rng, members in RANGE_MEMBERS.items()},
        "edges": [
            {
                "source": e.source,
                "target": e.target,
                "source_cluster": e.source_cluster,
                "source_range": e.source_range.token,
                "target_range": e.target_range.token,
            }
            for e in graph.edges
        ],
    }
