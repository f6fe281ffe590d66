"""Regenerate tests/fixtures/vader_fixtures.json.

Two fixture sources, both independent of the package's analyzer:

  * "reference-demo": sentences with compound scores published by the
    reference implementation's own demo runs (rounded to 4 decimals there).
  * "hand-derived": sentences whose valence sums are simple enough to write
    down term by term from the documented rule constants and the shipped
    lexicon valences; each entry's formula is spelled out below.
"""

import json
import math
import os

B = 0.293  # booster increment
C = 0.733  # all-caps increment
N = -0.74  # negation scalar
EP = 0.292  # per-'!' amplification


def n(total):
    """Compound normalization."""
    return total / math.sqrt(total * total + 15)


REFERENCE_DEMO = [
    ("VADER is smart, handsome, and funny.", 0.8316),
    ("VADER is smart, handsome, and funny!", 0.8439),
    ("VADER is very smart, handsome, and funny.", 0.8545),
    ("VADER is VERY SMART, handsome, and FUNNY.", 0.9227),
    ("VADER is VERY SMART, handsome, and FUNNY!!!", 0.9342),
    ("VADER is VERY SMART, uber handsome, and FRIGGIN FUNNY!!!", 0.9469),
    ("VADER is not smart, handsome, nor funny.", -0.7424),
    ("The book was good.", 0.4404),
    ("At least it isn't a horrible book.", 0.431),
    ("The book was only kind of good.", 0.3832),
    ("Today SUX!", -0.5461),
    ("Not bad at all", 0.431),
]

# Lexicon valences used below: good 1.9, bad -2.5, great 3.1, happy 2.7,
# hate -2.7, love 3.2, no -1.2.
HAND_DERIVED = [
    ("good", n(1.9)),
    ("bad", n(-2.5)),
    ("great", n(3.1)),
    ("very good", n(1.9 + B)),
    ("not good", n(1.9 * N)),
    ("not very good", n((1.9 + B) * N)),
    ("good!", n(1.9 + EP)),
    ("good!!", n(1.9 + 2 * EP)),
    ("good!!!!!", n(1.9 + 4 * EP)),  # '!' amplification caps at 4
    ("good??", n(1.9 + 2 * 0.18)),
    ("good????", n(1.9 + 0.96)),  # '?' amplification caps at 0.96
    ("GOOD good", n((1.9 + C) + 1.9)),
    ("extremely bad", n(-2.5 - B)),  # booster flips sign for negative words
    ("barely good", n(1.9 - B)),
    ("no good", n(1.9 * N)),  # "no" negates the following lexicon word
    ("no", n(-1.2)),  # trailing "no" keeps its own valence
    ("never so good", n((1.9 + B) * 1.25)),  # "never so" intensifies
    ("good but bad", n(1.9 * 0.5 + (-2.5) * 1.5)),
    ("it was sort of good", n(1.9 - B)),  # "sort of" dampener bigram
    ("no good or bad", n(1.9 * N + (-2.5) * N)),  # "no X or Y" negates both
    ("HAPPY people", n(2.7 + C)),
    ("hate love", n(-2.7 + 3.2)),
]


def main():
    fixtures = [
        {"text": text, "compound": compound, "source": "reference-demo"}
        for text, compound in REFERENCE_DEMO
    ] + [
        {"text": text, "compound": compound, "source": "hand-derived"}
        for text, compound in HAND_DERIVED
    ]
    out = os.path.join(
        os.path.dirname(__file__), "..", "tests", "fixtures", "vader_fixtures.json"
    )
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(fixtures, fh, indent=2)
        fh.write("\n")
    print(f"wrote {len(fixtures)} fixtures to {out}")


if __name__ == "__main__":
    main()
