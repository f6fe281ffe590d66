"""emograd: emotion-transition data pipeline and evaluation toolkit."""

from . import labeling, metrics, pipeline, schemas, taxonomy, vader
from .labeling import LabelDecision, dominant_emotion
from .metrics import EvalRecord, EvalReport, evaluate
from .pipeline import LabeledPair, ParaphrasePair, PrefixStyle
from .taxonomy import (
    EMOTIONS,
    SentimentRange,
    TransitionGraph,
    build_transition_graph,
    cluster_of,
    lowering_targets,
    median_score,
    range_of,
    select_target,
)

__version__ = "0.1.0"

__all__ = [
    "EMOTIONS",
    "EvalRecord",
    "EvalReport",
    "LabelDecision",
    "LabeledPair",
    "ParaphrasePair",
    "PrefixStyle",
    "SentimentRange",
    "TransitionGraph",
    "build_transition_graph",
    "cluster_of",
    "dominant_emotion",
    "evaluate",
    "labeling",
    "lowering_targets",
    "median_score",
    "metrics",
    "pipeline",
    "range_of",
    "schemas",
    "select_target",
    "taxonomy",
    "vader",
]
