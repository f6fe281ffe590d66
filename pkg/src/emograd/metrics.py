"""Evaluation metrics: Exact-SR / Exact-FE for emotion transition, and
BLEU / ROUGE-L / METEOR for paraphrase quality.

All text metrics consume token sequences produced by the shared tokenizer.
METEOR here runs two match stages (exact, then Porter stem) and, among all
maximum alignments, counts the minimum number of chunks; WordNet synonym
matching is deliberately left out.
"""

from __future__ import annotations

import math
import string
import unicodedata
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

from . import taxonomy
from .stemmer import stem


class MetricError(ValueError):
    pass


_ASCII_PUNCT = set(string.punctuation)


def _is_punct(ch: str) -> bool:
    return ch in _ASCII_PUNCT or unicodedata.category(ch).startswith("P")


def tokenize(text: str) -> list[str]:
    """Lowercase word tokens; every punctuation character is its own token."""
    tokens: list[str] = []
    word: list[str] = []
    for ch in text.lower():
        if ch.isspace():
            if word:
                tokens.append("".join(word))
                word = []
        elif _is_punct(ch):
            if word:
                tokens.append("".join(word))
                word = []
            tokens.append(ch)
        else:
            word.append(ch)
    if word:
        tokens.append("".join(word))
    return tokens


def _ngrams(tokens: Sequence[str], n: int):
    return [tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)]


def bleu(
    references: Sequence[Sequence[str]],
    hypotheses: Sequence[Sequence[str]],
    max_n: int = 4,
) -> float:
    """Corpus-level BLEU-4: clipped n-gram precisions, brevity penalty,
    no smoothing (any zero precision zeroes the score)."""
    if len(references) != len(hypotheses):
        raise MetricError(
            f"reference/hypothesis count mismatch: {len(references)} != {len(hypotheses)}"
        )
    if not references:
        raise MetricError("bleu requires at least one reference/hypothesis pair")

    clipped = [0] * max_n
    totals = [0] * max_n
    hyp_len = 0
    ref_len = 0
    for ref, hyp in zip(references, hypotheses):
        hyp_len += len(hyp)
        ref_len += len(ref)
        for n in range(1, max_n + 1):
            hyp_counts = Counter(_ngrams(hyp, n))
            ref_counts = Counter(_ngrams(ref, n))
            totals[n - 1] += sum(hyp_counts.values())
            clipped[n - 1] += sum(
                min(count, ref_counts[gram]) for gram, count in hyp_counts.items()
            )

    if any(t == 0 for t in totals) or any(c == 0 for c in clipped):
        return 0.0
    log_mean = sum(math.log(clipped[i] / totals[i]) for i in range(max_n)) / max_n
    brevity = 1.0 if hyp_len >= ref_len else math.exp(1.0 - ref_len / hyp_len)
    return brevity * math.exp(log_mean)


def clipped_precisions(
    reference: Sequence[str], hypothesis: Sequence[str], max_n: int = 4
) -> list[tuple[int, int]]:
    """Per-order (clipped, total) n-gram counts for one pair; test/debug aid."""
    out = []
    for n in range(1, max_n + 1):
        hyp_counts = Counter(_ngrams(hypothesis, n))
        ref_counts = Counter(_ngrams(reference, n))
        total = sum(hyp_counts.values())
        clip = sum(min(count, ref_counts[g]) for g, count in hyp_counts.items())
        out.append((clip, total))
    return out


def sentence_bleu(
    reference: Sequence[str], hypothesis: Sequence[str], max_n: int = 4
) -> float:
    """Per-sentence BLEU with add-1 smoothing on orders >= 2 (detail reports)."""
    counts = clipped_precisions(reference, hypothesis, max_n)
    if counts[0][1] == 0 or counts[0][0] == 0:
        return 0.0
    log_sum = math.log(counts[0][0] / counts[0][1])
    for clip, total in counts[1:]:
        log_sum += math.log((clip + 1) / (total + 1))
    hyp_len = len(hypothesis)
    ref_len = len(reference)
    brevity = 1.0 if hyp_len >= ref_len else math.exp(1.0 - ref_len / hyp_len)
    return brevity * math.exp(log_sum / max_n)


def _lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    if len(a) < len(b):
        a, b = b, a
    prev = [0] * (len(b) + 1)
    for i in range(1, len(a) + 1):
        cur = [0] * (len(b) + 1)
        for j in range(1, len(b) + 1):
            if a[i - 1] == b[j - 1]:
                cur[j] = prev[j - 1] + 1
            else:
                cur[j] = max(prev[j], cur[j - 1])
        prev = cur
    return prev[len(b)]


def rouge_l(
    reference: Sequence[str], hypothesis: Sequence[str], beta: float = 1.0
) -> float:
    """LCS-based F-score for one pair (beta=1 unless configured otherwise)."""
    if not reference or not hypothesis:
        return 0.0
    lcs = _lcs_length(reference, hypothesis)
    if lcs == 0:
        return 0.0
    precision = lcs / len(hypothesis)
    recall = lcs / len(reference)
    return (1 + beta**2) * precision * recall / (recall + beta**2 * precision)


# Exhaustive alignment search is exact below this budget; longer inputs keep
# the best alignment found, which only ever overstates the chunk penalty.
_ALIGN_NODE_CAP = 20_000


def _align(reference: Sequence[str], hypothesis: Sequence[str]) -> tuple[int, int]:
    """Match count and minimum chunk count of a maximum two-stage alignment."""
    ref_words = list(reference)
    hyp_words = list(hypothesis)
    exact_quota = Counter(hyp_words) & Counter(ref_words)
    resid_hyp = Counter(hyp_words) - Counter(ref_words)
    resid_ref = Counter(ref_words) - Counter(hyp_words)
    stem_quota = Counter(
        stem(w) for w in resid_hyp.elements()
    ) & Counter(stem(w) for w in resid_ref.elements())

    matches = sum(exact_quota.values()) + sum(stem_quota.values())
    if matches == 0:
        return 0, 0
    chunks = _min_chunks(ref_words, hyp_words, exact_quota, stem_quota)
    return matches, chunks


def _min_chunks(ref_words, hyp_words, exact_quota, stem_quota) -> int:
    ref_stems = [stem(w) for w in ref_words]
    hyp_stems = [stem(w) for w in hyp_words]
    hyp_n = len(hyp_words)

    need_exact = Counter(exact_quota)
    need_stem = Counter(stem_quota)
    total_need = sum(need_exact.values()) + sum(need_stem.values())

    hyp_word_left = Counter(hyp_words)
    hyp_stem_left = Counter(hyp_stems)
    ref_free_word = Counter(ref_words)
    free = [True] * len(ref_words)

    word_positions: dict = {}
    stem_positions: dict = {}
    for j, w in enumerate(ref_words):
        word_positions.setdefault(w, []).append(j)
        stem_positions.setdefault(ref_stems[j], []).append(j)

    best = [total_need + 1]
    nodes = [0]

    def candidates(i, exact, prev_j):
        if exact:
            idxs = [j for j in word_positions.get(hyp_words[i], ()) if free[j]]
        else:
            idxs = [
                j
                for j in stem_positions.get(hyp_stems[i], ())
                if free[j] and ref_free_word[ref_words[j]] - 1 >= need_exact[ref_words[j]]
            ]
        # try the run-extending partner first so a tight bound appears early
        if prev_j is not None and prev_j + 1 in idxs:
            idxs.remove(prev_j + 1)
            idxs.insert(0, prev_j + 1)
        return idxs

    def dfs(i, placed, chunks, prev_j):
        if chunks >= best[0] or nodes[0] > _ALIGN_NODE_CAP:
            return
        if placed < total_need and prev_j is None and chunks + 1 >= best[0]:
            return  # any further match must open a new chunk
        if placed == total_need:
            best[0] = chunks
            return
        if i == hyp_n:
            return
        nodes[0] += 1
        w = hyp_words[i]
        s = hyp_stems[i]
        hyp_word_left[w] -= 1
        hyp_stem_left[s] -= 1

        if need_exact[w] > 0:
            for j in candidates(i, True, prev_j):
                need_exact[w] -= 1
                free[j] = False
                ref_free_word[w] -= 1
                dfs(i + 1, placed + 1, chunks + (0 if prev_j == j - 1 else 1), j)
                ref_free_word[w] += 1
                free[j] = True
                need_exact[w] += 1

        if need_stem[s] > 0 and hyp_word_left[w] >= need_exact[w]:
            for j in candidates(i, False, prev_j):
                need_stem[s] -= 1
                free[j] = False
                ref_free_word[ref_words[j]] -= 1
                dfs(i + 1, placed + 1, chunks + (0 if prev_j == j - 1 else 1), j)
                ref_free_word[ref_words[j]] += 1
                free[j] = True
                need_stem[s] += 1

        # leave this hypothesis position unmatched if quotas still fit
        if hyp_word_left[w] >= need_exact[w] and hyp_stem_left[s] >= need_stem[s]:
            dfs(i + 1, placed, chunks, None)

        hyp_stem_left[s] += 1
        hyp_word_left[w] += 1

    dfs(0, 0, 0, None)
    return best[0] if best[0] <= total_need else total_need


def meteor(reference: Sequence[str], hypothesis: Sequence[str]) -> float:
    """Exact+stem METEOR for one pair: F10 with the 0.5*(ch/m)^3 penalty."""
    if not reference or not hypothesis:
        return 0.0
    matches, chunks = _align(reference, hypothesis)
    if matches == 0:
        return 0.0
    precision = matches / len(hypothesis)
    recall = matches / len(reference)
    fmean = 10 * precision * recall / (recall + 9 * precision)
    penalty = 0.5 * (chunks / matches) ** 3
    return fmean * (1 - penalty)


@dataclass(frozen=True)
class EvalRecord:
    id: str
    prediction: str
    reference: str
    target_emotion: str
    prediction_emotion: Optional[str] = None

    def __post_init__(self):
        taxonomy.emotion_index(self.target_emotion)
        if self.prediction_emotion is not None:
            taxonomy.emotion_index(self.prediction_emotion)


@dataclass(frozen=True)
class EvalReport:
    exact_sr: float
    exact_fe: float
    bleu: float
    rouge_l: float
    meteor: float
    n_records: int
    n_labeled: int

    def to_dict(self) -> dict:
        return {
            "exact_sr": self.exact_sr,
            "exact_fe": self.exact_fe,
            "bleu": self.bleu,
            "rouge_l": self.rouge_l,
            "meteor": self.meteor,
            "n_records": self.n_records,
            "n_labeled": self.n_labeled,
        }


def exact_scores(records: Sequence[EvalRecord]) -> tuple[float, float]:
    """(Exact-SR, Exact-FE): share of predictions hitting the target range /
    the exact target emotion. Unlabeled predictions count as misses."""
    if not records:
        raise MetricError("exact_scores requires at least one record")
    fe = 0
    sr = 0
    for record in records:
        if record.prediction_emotion is None:
            continue
        if record.prediction_emotion == record.target_emotion:
            fe += 1
        if taxonomy.range_of(record.prediction_emotion) == taxonomy.range_of(
            record.target_emotion
        ):
            sr += 1
    n = len(records)
    return sr / n, fe / n


def evaluate(records: Sequence[EvalRecord]) -> EvalReport:
    """All five scores over one record set."""
    if not records:
        raise MetricError("evaluate requires at least one record")
    refs = [tokenize(r.reference) for r in records]
    hyps = [tokenize(r.prediction) for r in records]
    exact_sr, exact_fe = exact_scores(records)
    return EvalReport(
        exact_sr=exact_sr,
        exact_fe=exact_fe,
        bleu=bleu(refs, hyps),
        rouge_l=sum(rouge_l(r, h) for r, h in zip(refs, hyps)) / len(records),
        meteor=sum(meteor(r, h) for r, h in zip(refs, hyps)) / len(records),
        n_records=len(records),
        n_labeled=sum(1 for r in records if r.prediction_emotion is not None),
    )


def per_record_scores(records: Sequence[EvalRecord]) -> list[dict]:
    """Per-record detail rows for the JSON report."""
    rows = []
    for record in records:
        ref = tokenize(record.reference)
        hyp = tokenize(record.prediction)
        labeled = record.prediction_emotion is not None
        rows.append(
            {
                "id": record.id,
                "sentence_bleu": sentence_bleu(ref, hyp),
                "rouge_l": rouge_l(ref, hyp),
                "meteor": meteor(ref, hyp),
                "prediction_emotion": record.prediction_emotion,
                "target_emotion": record.target_emotion,
                "fe_match": labeled and record.prediction_emotion == record.target_emotion,
                "sr_match": labeled
                and taxonomy.range_of(record.prediction_emotion)
                == taxonomy.range_of(record.target_emotion),
            }
        )
    return rows
