"""Rule-based sentiment-intensity analyzer compatible with reference VADER.

The scoring rules (token valences, ALL-CAPS emphasis, distance-decayed
boosters, tri-gram negation, "but" re-weighting, punctuation amplification,
special idioms, compound normalization with alpha=15) follow the reference
algorithm, so compound scores agree with it wherever the shipped lexicon
carries the reference valence for every sentiment-bearing token. The
bundled lexicon is a compact subset; a full reference lexicon file in the
same tab-separated format can be dropped in via ``load_lexicon``.

Deviations from the reference, on purpose:
  * no emoji-description translation step (pure-text input assumed);
  * scores are not rounded (reference rounds compound to 4 and the
    neg/neu/pos shares to 3 decimals), so neg + neu + pos == 1 exactly;
  * empty input yields neu=1 rather than an all-zero vector.
"""

from __future__ import annotations

import json
import math
import statistics
import string
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Mapping, Optional

from . import taxonomy

# Empirically derived reference constants.
BOOSTER_INCR = 0.293
BOOSTER_DECR = -0.293
CAPS_INCR = 0.733
NEGATION_SCALAR = -0.74
NORMALIZE_ALPHA = 15.0
EXCLAMATION_INCR = 0.292  # per "!", at most 4 counted
QUESTION_INCR = 0.18  # per "?" for 2-3 marks, else capped at 0.96
QUESTION_CAP = 0.96


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class SentimentLexicon:
    valences: Mapping[str, float]
    boosters: Mapping[str, float]
    negations: frozenset
    idioms: Mapping[str, float]


@dataclass(frozen=True)
class PolarityScores:
    neg: float
    neu: float
    pos: float
    compound: float

    def to_dict(self) -> dict:
        return {"neg": self.neg, "neu": self.neu, "pos": self.pos, "compound": self.compound}


def load_valences(path) -> dict:
    """Parse a ``token<TAB>valence`` lexicon file; extra columns are ignored."""
    valences = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) < 2 or not parts[0]:
                raise LexiconError(f"{path}:{lineno}: expected 'token<TAB>valence'")
            try:
                valence = float(parts[1])
            except ValueError:
                raise LexiconError(
                    f"{path}:{lineno}: valence is not a number: {parts[1]!r}"
                ) from None
            valences[parts[0]] = valence
    return valences


def load_rules(path) -> tuple[dict, frozenset, dict]:
    with open(path, encoding="utf-8") as fh:
        rules = json.load(fh)
    return (
        dict(rules["boosters"]),
        frozenset(rules["negations"]),
        dict(rules["idioms"]),
    )


def load_lexicon(lexicon_path, rules_path) -> SentimentLexicon:
    boosters, negations, idioms = load_rules(rules_path)
    return SentimentLexicon(
        valences=load_valences(lexicon_path),
        boosters=boosters,
        negations=negations,
        idioms=idioms,
    )


@lru_cache(maxsize=1)
def default_lexicon() -> SentimentLexicon:
    data = resources.files("emograd") / "data"
    return load_lexicon(data / "vader_lexicon.txt", data / "vader_rules.json")


def _words_and_emoticons(text: str) -> list[str]:
    # Strip boundary punctuation per token; tokens whose core is very short
    # (emoticons such as ":)") are kept verbatim.
    tokens = []
    for token in text.split():
        stripped = token.strip(string.punctuation)
        tokens.append(token if len(stripped) <= 2 else stripped)
    return tokens


def _allcap_differential(words) -> bool:
    allcaps = sum(1 for w in words if w.isupper())
    return 0 < len(words) - allcaps < len(words)


def _negated(words, negations) -> bool:
    for word in words:
        lower = word.lower()
        if lower in negations or "n't" in lower:
            return True
    return False


def _normalize(score: float) -> float:
    norm = score / math.sqrt(score * score + NORMALIZE_ALPHA)
    return max(-1.0, min(1.0, norm))


def _scalar_inc_dec(word, valence, cap_diff, boosters) -> float:
    scalar = boosters.get(word.lower(), 0.0)
    if scalar == 0.0:
        return 0.0
    if valence < 0:
        scalar *= -1
    if word.isupper() and cap_diff:
        scalar += CAPS_INCR if valence > 0 else -CAPS_INCR
    return scalar


def _negation_check(valence, words, start_i, i, negations):
    lowered = [w.lower() for w in words]
    if start_i == 0:
        if _negated([lowered[i - 1]], negations):
            valence *= NEGATION_SCALAR
    elif start_i == 1:
        if lowered[i - 2] == "never" and lowered[i - 1] in ("so", "this"):
            valence *= 1.25
        elif lowered[i - 2] == "without" and lowered[i - 1] == "doubt":
            pass
        elif _negated([lowered[i - 2]], negations):
            valence *= NEGATION_SCALAR
    elif start_i == 2:
        if lowered[i - 3] == "never" and (
            lowered[i - 2] in ("so", "this") or lowered[i - 1] in ("so", "this")
        ):
            valence *= 1.25
        elif lowered[i - 3] == "without" and "doubt" in (lowered[i - 2], lowered[i - 1]):
            pass
        elif _negated([lowered[i - 3]], negations):
            valence *= NEGATION_SCALAR
    return valence


def _special_idioms_check(valence, words, i, lexicon):
    lowered = [w.lower() for w in words]
    onezero = f"{lowered[i - 1]} {lowered[i]}"
    twoonezero = f"{lowered[i - 2]} {lowered[i - 1]} {lowered[i]}"
    twoone = f"{lowered[i - 2]} {lowered[i - 1]}"
    threetwoone = f"{lowered[i - 3]} {lowered[i - 2]} {lowered[i - 1]}"
    threetwo = f"{lowered[i - 3]} {lowered[i - 2]}"
    for sequence in (onezero, twoonezero, twoone, threetwoone, threetwo):
        if sequence in lexicon.idioms:
            valence = lexicon.idioms[sequence]
            break
    if len(lowered) - 1 > i:
        zeroone = f"{lowered[i]} {lowered[i + 1]}"
        if zeroone in lexicon.idioms:
            valence = lexicon.idioms[zeroone]
    if len(lowered) - 1 > i + 1:
        zeroonetwo = f"{lowered[i]} {lowered[i + 1]} {lowered[i + 2]}"
        if zeroonetwo in lexicon.idioms:
            valence = lexicon.idioms[zeroonetwo]
    for ngram in (threetwoone, threetwo, twoone):
        if ngram in lexicon.boosters:
            valence += lexicon.boosters[ngram]
    return valence


def _least_check(valence, words, i, lexicon):
    if (
        i > 1
        and words[i - 1].lower() not in lexicon.valences
        and words[i - 1].lower() == "least"
    ):
        if words[i - 2].lower() not in ("at", "very"):
            valence *= NEGATION_SCALAR
    elif (
        i == 1
        and words[i - 1].lower() not in lexicon.valences
        and words[i - 1].lower() == "least"
    ):
        valence *= NEGATION_SCALAR
    return valence


def _item_valence(lexicon, words, i, item, cap_diff):
    lower = item.lower()
    if lower not in lexicon.valences:
        return 0.0
    valence = lexicon.valences[lower]

    # "no" acts as a negator for a following lexicon word instead of
    # contributing its own valence.
    if lower == "no" and i != len(words) - 1 and words[i + 1].lower() in lexicon.valences:
        valence = 0.0
    if (
        (i > 0 and words[i - 1].lower() == "no")
        or (i > 1 and words[i - 2].lower() == "no")
        or (
            i > 2
            and words[i - 3].lower() == "no"
            and words[i - 1].lower() in ("or", "nor")
        )
    ):
        valence = lexicon.valences[lower] * NEGATION_SCALAR

    if item.isupper() and cap_diff:
        valence += CAPS_INCR if valence > 0 else -CAPS_INCR

    for start_i in range(3):
        if i > start_i and words[i - (start_i + 1)].lower() not in lexicon.valences:
            scalar = _scalar_inc_dec(words[i - (start_i + 1)], valence, cap_diff, lexicon.boosters)
            if start_i == 1 and scalar != 0:
                scalar *= 0.95
            if start_i == 2 and scalar != 0:
                scalar *= 0.9
            valence += scalar
            valence = _negation_check(valence, words, start_i, i, lexicon.negations)
            if start_i == 2:
                valence = _special_idioms_check(valence, words, i, lexicon)

    return _least_check(valence, words, i, lexicon)


def _but_check(words, sentiments):
    lowered = [w.lower() for w in words]
    if "but" not in lowered:
        return sentiments
    but_index = lowered.index("but")
    return [
        s * 0.5 if i < but_index else (s * 1.5 if i > but_index else s)
        for i, s in enumerate(sentiments)
    ]


def _punctuation_emphasis(text: str) -> float:
    ep = min(text.count("!"), 4) * EXCLAMATION_INCR
    qm_count = text.count("?")
    qm = 0.0
    if qm_count > 1:
        qm = qm_count * QUESTION_INCR if qm_count <= 3 else QUESTION_CAP
    return ep + qm


def score_text(lexicon: SentimentLexicon, text: str) -> PolarityScores:
    """Polarity scores for one text; deterministic and side-effect free."""
    words = _words_and_emoticons(text)
    cap_diff = _allcap_differential(words)

    sentiments = []
    for i, item in enumerate(words):
        lower = item.lower()
        if lower in lexicon.boosters or (
            i < len(words) - 1 and lower == "kind" and words[i + 1].lower() == "of"
        ):
            sentiments.append(0.0)
        else:
            sentiments.append(_item_valence(lexicon, words, i, item, cap_diff))
    sentiments = _but_check(words, sentiments)

    if not sentiments:
        return PolarityScores(neg=0.0, neu=1.0, pos=0.0, compound=0.0)

    total = math.fsum(sentiments)
    punct = _punctuation_emphasis(text)
    if total > 0:
        total += punct
    elif total < 0:
        total -= punct
    compound = _normalize(total)

    pos_sum = 0.0
    neg_sum = 0.0
    neu_count = 0
    for s in sentiments:
        if s > 0:
            pos_sum += s + 1  # the +1/-1 keep neutral words weighted in the shares
        elif s < 0:
            neg_sum += s - 1
        else:
            neu_count += 1
    if pos_sum > abs(neg_sum):
        pos_sum += punct
    elif pos_sum < abs(neg_sum):
        neg_sum -= punct
    denom = pos_sum + abs(neg_sum) + neu_count
    return PolarityScores(
        neg=abs(neg_sum) / denom,
        neu=neu_count / denom,
        pos=pos_sum / denom,
        compound=compound,
    )


def median_by_emotion(
    corpus: Iterable[tuple[str, str]], lexicon: Optional[SentimentLexicon] = None
) -> dict:
    """Median compound score per emotion over (text, emotion) pairs.

    Emotions that never occur are omitted; an even number of texts medians
    to the mean of the two central compounds.
    """
    if lexicon is None:
        lexicon = default_lexicon()
    compounds: dict[str, list[float]] = {}
    for text, emotion in corpus:
        taxonomy.emotion_index(emotion)
        compounds.setdefault(emotion, []).append(score_text(lexicon, text).compound)
    return {emotion: statistics.median(values) for emotion, values in compounds.items()}
