"""Regenerate the 10-record evaluation fixture and its oracle report.

The oracle numbers come from the brute-force metric implementations in
tests/oracles.py (exhaustive enumeration, exact fractions) plus hand-derived
emotion labels, so the production metric path never feeds its own expected
values. Texts are kept short enough for exhaustive enumeration.
"""

import json
import os
import string
import sys
import unicodedata

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(HERE, "..", "tests"))

from oracles import bleu_bruteforce, meteor_bruteforce, rouge_l_bruteforce

# (id, prediction, reference, target_emotion, prediction_scores, expected_label)
RECORDS = [
    ("r01", "he is calm about the news now .", "he is calm about the news now .",
     "annoyance", {"annoyance": 0.9, "neutral": 0.05}, "annoyance"),
    ("r02", "totally different words here", "nothing shared at all okay",
     "anger", {"disgust": 0.8}, "disgust"),
    ("r03", "the cat the sat on the mat", "the cat sat on the mat",
     "relief", {"relief": 0.4}, None),
    ("r04", "on mat the cat sat", "the cat sat on mat",
     "joy", {"joy": 0.6, "love": 0.6}, "joy"),
    ("r05", "the dog is running fast", "the dog runs fast",
     "nervousness", {"fear": 0.7}, "fear"),
    ("r06", "wow , really ?", "wow ! really ?",
     "surprise", {"surprise": 0.55}, "surprise"),
    ("r07", "", "something was said",
     "caring", {}, None),
    ("r08", "good good bad good", "good good good bad",
     "sadness", {"sadness": 0.51}, "sadness"),
    ("r09", "she stayed quiet and walked away from the noisy room",
     "she kept quiet and walked away from the loud room",
     "annoyance", {"annoyance": 0.6, "anger": 0.3}, "annoyance"),
    ("r10", "it is fine i guess", "this seems fine to me",
     "optimism", {"admiration": 0.8}, "admiration"),
]

# Range table (copied by hand for SR checks, not imported from the package).
RANGE = {
    "anger": "high_neg", "disgust": "high_neg", "grief": "high_neg",
    "fear": "high_neg", "sadness": "high_neg",
    "nervousness": "low_neg", "annoyance": "low_neg", "disappointment": "low_neg",
    "embarrassment": "low_neg", "remorse": "low_neg", "disapproval": "low_neg",
    "confusion": "neutral", "curiosity": "neutral", "realization": "neutral",
    "surprise": "neutral", "neutral": "neutral",
    "approval": "low_pos", "caring": "low_pos", "desire": "low_pos", "relief": "low_pos",
    "amusement": "high_pos", "excitement": "high_pos", "pride": "high_pos",
    "optimism": "high_pos", "gratitude": "high_pos", "joy": "high_pos",
    "admiration": "high_pos", "love": "high_pos",
}

EMOTION_ORDER = [
    "admiration", "amusement", "anger", "annoyance", "approval", "caring",
    "confusion", "curiosity", "desire", "disappointment", "disapproval",
    "disgust", "embarrassment", "excitement", "fear", "gratitude", "grief",
    "joy", "love", "nervousness", "optimism", "pride", "realization",
    "relief", "remorse", "sadness", "surprise", "neutral",
]


def simple_tokenize(text):
    tokens = []
    word = ""
    for ch in text.lower():
        punct = ch in string.punctuation or unicodedata.category(ch).startswith("P")
        if ch.isspace() or punct:
            if word:
                tokens.append(word)
                word = ""
            if punct:
                tokens.append(ch)
        else:
            word += ch
    if word:
        tokens.append(word)
    return tokens


def dominant(scores):
    best = None
    for emotion in EMOTION_ORDER:
        if emotion in scores and (best is None or scores[emotion] > scores[best]):
            best = emotion
    if best is None or scores[best] <= 0.5:
        return None
    return best


def main():
    refs = []
    hyps = []
    fe = sr = labeled = 0
    rouge_sum = 0.0
    meteor_sum = 0.0
    rows = []
    for id, prediction, reference, target, scores, expected_label in RECORDS:
        label = dominant(scores)
        assert label == expected_label, (id, label, expected_label)
        if label is not None:
            labeled += 1
            if label == target:
                fe += 1
            if RANGE[label] == RANGE[target]:
                sr += 1
        ref_tokens = simple_tokenize(reference)
        hyp_tokens = simple_tokenize(prediction)
        refs.append(ref_tokens)
        hyps.append(hyp_tokens)
        rouge_sum += rouge_l_bruteforce(ref_tokens, hyp_tokens)
        meteor_sum += meteor_bruteforce(ref_tokens, hyp_tokens)
        rows.append(
            {
                "id": id,
                "prediction": prediction,
                "reference": reference,
                "target_emotion": target,
                "prediction_scores": scores,
            }
        )

    n = len(RECORDS)
    oracle = {
        "exact_sr": sr / n,
        "exact_fe": fe / n,
        "bleu": bleu_bruteforce(refs, hyps),
        "rouge_l": rouge_sum / n,
        "meteor": meteor_sum / n,
        "n_records": n,
        "n_labeled": labeled,
    }

    fixtures = os.path.join(HERE, "..", "tests", "fixtures")
    os.makedirs(fixtures, exist_ok=True)
    with open(os.path.join(fixtures, "eval_records.jsonl"), "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, ensure_ascii=False, sort_keys=True) + "\n")
    with open(os.path.join(fixtures, "eval_oracle.json"), "w", encoding="utf-8") as fh:
        json.dump(oracle, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(json.dumps(oracle, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
