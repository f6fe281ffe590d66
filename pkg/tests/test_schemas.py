import json
import os

import pytest

from emograd import schemas
from emograd.labeling import LabelDecision
from emograd.pipeline import LabeledPair
from emograd.schemas import (
    DataError,
    atomic_write_text,
    load_decisions,
    load_eval_records,
    load_labeled,
    load_pairs,
    load_scores,
    read_jsonl,
    validate_file,
    write_jsonl,
)


def write_lines(path, rows):
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row) + "\n")


def test_read_jsonl_reports_line_numbers(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"ok": 1}\nnot json\n', encoding="utf-8")
    with pytest.raises(DataError, match=":2"):
        read_jsonl(path)


def test_read_jsonl_rejects_non_objects(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text("[1, 2]\n", encoding="utf-8")
    with pytest.raises(DataError, match="object"):
        read_jsonl(path)


def test_read_jsonl_skips_blank_lines(tmp_path):
    path = tmp_path / "ok.jsonl"
    path.write_text('{"a": 1}\n\n{"b": 2}\n', encoding="utf-8")
    assert [obj for _, obj in read_jsonl(path)] == [{"a": 1}, {"b": 2}]


def test_atomic_write_leaves_no_partials(tmp_path):
    target = tmp_path / "out.txt"
    atomic_write_text(target, "hello\n")
    assert target.read_text(encoding="utf-8") == "hello\n"
    assert [p.name for p in tmp_path.iterdir()] == ["out.txt"]


def test_write_jsonl_stable_bytes(tmp_path):
    rows = [{"b": 2, "a": 1}, {"z": None}]
    first = tmp_path / "a.jsonl"
    second = tmp_path / "b.jsonl"
    write_jsonl(first, rows)
    write_jsonl(second, [{"a": 1, "b": 2}, {"z": None}])  # key order irrelevant
    assert first.read_bytes() == second.read_bytes()


def test_load_pairs_round_trip(tmp_path):
    path = tmp_path / "pairs.jsonl"
    write_lines(
        path,
        [
            {"id": "1", "input_text": "hello there", "target_text": "hi", "source": "quora"},
            {"id": "2", "input_text": "a", "target_text": "b"},
        ],
    )
    pairs = load_pairs(path)
    assert pairs[0].source == "quora"
    assert pairs[1].source == "other"


def test_load_pairs_rejects_bad_rows(tmp_path):
    path = tmp_path / "pairs.jsonl"
    write_lines(path, [{"id": "1", "input_text": "", "target_text": "b"}])
    with pytest.raises(DataError, match=":1"):
        load_pairs(path)


def test_load_scores_validates(tmp_path):
    path = tmp_path / "scores.jsonl"
    write_lines(path, [{"id": "1", "text": "x", "scores": {"anger": 0.9}}])
    assert load_scores(path)["1"] == ("x", {"anger": 0.9})
    write_lines(path, [{"id": "1", "text": "x", "scores": {"fury": 0.9}}])
    with pytest.raises(DataError, match="fury"):
        load_scores(path)
    write_lines(path, [{"id": "1", "text": "x", "scores": {"anger": 1.5}}])
    with pytest.raises(DataError, match="anger"):
        load_scores(path)


def test_load_scores_rejects_duplicates(tmp_path):
    path = tmp_path / "scores.jsonl"
    write_lines(
        path,
        [
            {"id": "1", "text": "x", "scores": {}},
            {"id": "1", "text": "y", "scores": {}},
        ],
    )
    with pytest.raises(DataError, match="duplicate"):
        load_scores(path)


def test_load_decisions(tmp_path):
    path = tmp_path / "d.jsonl"
    write_lines(
        path,
        [
            {"id": "1", "label": "anger", "top_score": 0.9, "threshold": 0.5},
            {"id": "2", "label": None, "top_score": 0.3, "threshold": 0.5},
        ],
    )
    decisions = load_decisions(path)
    assert decisions["1"] == LabelDecision("anger", 0.9, 0.5)
    assert decisions["2"].label is None


def test_labeled_round_trip(tmp_path):
    pair = LabeledPair(
        id="1",
        input_text="harsh words",
        target_text="soft words",
        source="paws",
        input_emotion="anger",
        target_emotion="annoyance",
    )
    path = tmp_path / "labeled.jsonl"
    write_jsonl(path, [schemas.labeled_row(pair)])
    loaded = load_labeled(path)
    assert loaded == [pair]
    row = json.loads(path.read_text(encoding="utf-8"))
    assert row["input_range"] == "high_neg"
    assert row["target_range"] == "low_neg"


def test_labeled_range_mismatch_rejected(tmp_path):
    path = tmp_path / "labeled.jsonl"
    write_lines(
        path,
        [
            {
                "id": "1",
                "input_text": "a",
                "target_text": "b",
                "input_emotion": "anger",
                "target_emotion": "annoyance",
                "input_range": "low_pos",
            }
        ],
    )
    with pytest.raises(DataError, match="input_range"):
        load_labeled(path)


def test_load_eval_records_labels_predictions(tmp_path):
    path = tmp_path / "eval.jsonl"
    write_lines(
        path,
        [
            {
                "id": "1",
                "prediction": "x",
                "reference": "y",
                "target_emotion": "anger",
                "prediction_scores": {"anger": 0.8, "joy": 0.1},
            },
            {"id": "2", "prediction": "x", "reference": "y", "target_emotion": "joy"},
        ],
    )
    records = load_eval_records(path, threshold=0.5)
    assert records[0].prediction_emotion == "anger"
    assert records[1].prediction_emotion is None


def test_validate_file_collects_errors(tmp_path):
    path = tmp_path / "pairs.jsonl"
    write_lines(
        path,
        [
            {"id": "1", "input_text": "ok", "target_text": "ok"},
            {"id": "2", "input_text": "ok"},
            {"id": "3", "input_text": "ok", "target_text": "ok", "source": "nope"},
        ],
    )
    errors = validate_file(path, "pairs")
    assert len(errors) == 2
    assert ":2:" in errors[0] and ":3:" in errors[1]


def test_validate_file_all_schemas_accept_valid_rows(tmp_path):
    samples = {
        "pairs": {"id": "1", "input_text": "a", "target_text": "b"},
        "scores": {"id": "1", "text": "a", "scores": {"joy": 0.5}},
        "decisions": {"id": "1", "label": None, "top_score": 0.1, "threshold": 0.5},
        "labeled": {
            "id": "1",
            "input_text": "a",
            "target_text": "b",
            "input_emotion": "anger",
            "target_emotion": "annoyance",
        },
        "eval": {"id": "1", "prediction": "", "reference": "r", "target_emotion": "joy"},
        "predictions": {"id": "1", "prediction": ""},
    }
    for schema, row in samples.items():
        path = tmp_path / f"{schema}.jsonl"
        write_lines(path, [row])
        assert validate_file(path, schema) == [], schema
