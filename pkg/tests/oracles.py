"""Independent brute-force oracles for the metric implementations.

Everything here is deliberately written against the metric definitions with
exhaustive enumeration and exact rational arithmetic, sharing no code with
the production implementations it checks. Only usable for short inputs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

from emograd.stemmer import stem


def lcs_bruteforce(a, b) -> int:
    """Longest common subsequence by enumerating subsequences of the shorter."""
    if len(a) > len(b):
        a, b = b, a

    def is_subsequence(sub, seq):
        pos = 0
        for token in seq:
            if pos < len(sub) and sub[pos] == token:
                pos += 1
        return pos == len(sub)

    for length in range(len(a), 0, -1):
        for keep in combinations(range(len(a)), length):
            if is_subsequence([a[i] for i in keep], b):
                return length
    return 0


def rouge_l_bruteforce(reference, hypothesis, beta=1) -> float:
    if not reference or not hypothesis:
        return 0.0
    lcs = lcs_bruteforce(reference, hypothesis)
    if lcs == 0:
        return 0.0
    p = Fraction(lcs, len(hypothesis))
    r = Fraction(lcs, len(reference))
    beta = Fraction(beta)
    return float((1 + beta**2) * p * r / (r + beta**2 * p))


def _count_ngram(tokens, gram):
    n = len(gram)
    return sum(1 for i in range(len(tokens) - n + 1) if tuple(tokens[i : i + n]) == gram)


def bleu_bruteforce(references, hypotheses, max_n=4) -> float:
    """Corpus BLEU from per-n-gram position scans and exact fractions."""
    assert len(references) == len(hypotheses) and references
    precisions = []
    for n in range(1, max_n + 1):
        clipped = 0
        total = 0
        for ref, hyp in zip(references, hypotheses):
            total += max(len(hyp) - n + 1, 0)
            seen = set()
            for i in range(len(hyp) - n + 1):
                gram = tuple(hyp[i : i + n])
                if gram in seen:
                    continue
                seen.add(gram)
                clipped += min(_count_ngram(hyp, gram), _count_ngram(ref, gram))
        if total == 0 or clipped == 0:
            return 0.0
        precisions.append(Fraction(clipped, total))
    c = sum(len(h) for h in hypotheses)
    r = sum(len(rf) for rf in references)
    bp = 1.0 if c >= r else math.exp(1 - Fraction(r, c))
    geo = math.exp(sum(math.log(p) for p in precisions) / max_n)
    return bp * geo


def _all_matchings(hyp_positions, candidates, free_ref):
    """Every matching (as a pair list) between hyp positions and candidate
    ref positions, including non-maximum ones."""
    if not hyp_positions:
        yield []
        return
    h, rest = hyp_positions[0], hyp_positions[1:]
    for tail in _all_matchings(rest, candidates, free_ref):
        yield tail
    for r in candidates[h]:
        if free_ref[r]:
            free_ref[r] = False
            for tail in _all_matchings(rest, candidates, free_ref):
                yield [(h, r)] + tail
            free_ref[r] = True


def _max_matchings(hyp_positions, candidates, ref_size, taken):
    free = [i not in taken for i in range(ref_size)]
    found = [
        m for m in _all_matchings(list(hyp_positions), candidates, free)
    ]
    best = max((len(m) for m in found), default=0)
    return best, [m for m in found if len(m) == best]


def meteor_alignments_bruteforce(reference, hypothesis):
    """All maximal two-stage alignments as (match_count, chunk_count) pairs."""
    exact_cands = {
        h: [r for r, token in enumerate(reference) if token == hypothesis[h]]
        for h in range(len(hypothesis))
    }
    best1, stage1 = _max_matchings(range(len(hypothesis)), exact_cands, len(reference), set())

    outcomes = []
    for m1 in stage1:
        used_h = {h for h, _ in m1}
        used_r = {r for _, r in m1}
        stem_cands = {
            h: [
                r
                for r, token in enumerate(reference)
                if r not in used_r and stem(token) == stem(hypothesis[h])
            ]
            for h in range(len(hypothesis))
            if h not in used_h
        }
        best2, stage2 = _max_matchings(sorted(stem_cands), stem_cands, len(reference), used_r)
        for m2 in stage2:
            alignment = sorted(m1 + m2)
            chunks = 0
            prev = None
            for h, r in alignment:
                if prev is None or prev != (h - 1, r - 1):
                    chunks += 1
                prev = (h, r)
            outcomes.append((best1 + best2, chunks))
    return outcomes


def meteor_bruteforce(reference, hypothesis) -> float:
    if not reference or not hypothesis:
        return 0.0
    outcomes = meteor_alignments_bruteforce(reference, hypothesis)
    match_counts = {m for m, _ in outcomes}
    assert len(match_counts) == 1, "stage-wise maximal match count must be unique"
    m = match_counts.pop()
    if m == 0:
        return 0.0
    chunks = min(ch for _, ch in outcomes)
    p = Fraction(m, len(hypothesis))
    r = Fraction(m, len(reference))
    f = 10 * p * r / (r + 9 * p)
    penalty = Fraction(1, 2) * Fraction(chunks, m) ** 3
    return float(f * (1 - penalty))


def min_chunks_bruteforce(reference, hypothesis) -> int:
    outcomes = meteor_alignments_bruteforce(reference, hypothesis)
    return min(ch for _, ch in outcomes)
