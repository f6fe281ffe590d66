"""JSONL/TSV interchange formats: readers, writers, and schema validators.

All writers are atomic (temp file in the target directory, then rename),
and all serialization is key-sorted so identical inputs give identical
output bytes.
"""

from __future__ import annotations

import json
import os
import tempfile
from typing import Iterable, Optional

from . import taxonomy
from .labeling import LabelDecision
from .metrics import EvalRecord
from .pipeline import SOURCES, LabeledPair, ParaphrasePair, PipelineError


class DataError(ValueError):
    pass


def dump_row(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


def read_jsonl(path) -> list[tuple[int, dict]]:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"{path}:{lineno}: invalid JSON: {exc.msg}") from None
            if not isinstance(obj, dict):
                raise DataError(f"{path}:{lineno}: expected a JSON object")
            rows.append((lineno, obj))
    return rows


def atomic_write_text(path, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_jsonl(path, rows: Iterable[dict]) -> None:
    atomic_write_text(path, "".join(dump_row(row) + "\n" for row in rows))


def write_json(path, obj) -> None:
    atomic_write_text(path, json.dumps(obj, ensure_ascii=False, sort_keys=True, indent=2) + "\n")


def write_tsv(path, rows: Iterable[tuple[str, str]]) -> None:
    atomic_write_text(path, "".join(f"{left}\t{right}\n" for left, right in rows))


# -- field checks -----------------------------------------------------------

def _string(obj, key, where, required=True, allow_empty=False) -> Optional[str]:
    if key not in obj:
        if required:
            raise DataError(f"{where}: missing field {key!r}")
        return None
    value = obj[key]
    if not isinstance(value, str) or (not allow_empty and not value.strip()):
        raise DataError(f"{where}: field {key!r} must be a non-empty string")
    return value


def _emotion(obj, key, where, required=True) -> Optional[str]:
    value = _string(obj, key, where, required=required)
    if value is not None and not taxonomy.is_emotion(value):
        raise DataError(f"{where}: field {key!r} is not a known emotion: {value!r}")
    return value


def _score_map(obj, key, where, required=True) -> Optional[dict]:
    if key not in obj:
        if required:
            raise DataError(f"{where}: missing field {key!r}")
        return None
    scores = obj[key]
    if not isinstance(scores, dict):
        raise DataError(f"{where}: field {key!r} must be an object")
    for emotion, confidence in scores.items():
        if not taxonomy.is_emotion(emotion):
            raise DataError(f"{where}: unknown emotion in {key!r}: {emotion!r}")
        if not isinstance(confidence, (int, float)) or isinstance(confidence, bool) or not (
            0.0 <= confidence <= 1.0
        ):
            raise DataError(f"{where}: confidence for {emotion!r} must be in [0, 1]")
    return scores


# -- record validators (raise DataError) ------------------------------------

def check_pairs_row(obj, where) -> None:
    _string(obj, "id", where)
    _string(obj, "input_text", where)
    _string(obj, "target_text", where)
    source = _string(obj, "source", where, required=False)
    if source is not None and source not in SOURCES:
        raise DataError(f"{where}: field 'source' must be one of {SOURCES}")


def check_scores_row(obj, where) -> None:
    _string(obj, "id", where)
    _string(obj, "text", where, allow_empty=True)
    _score_map(obj, "scores", where)


def check_decision_row(obj, where) -> None:
    _string(obj, "id", where)
    if "label" not in obj:
        raise DataError(f"{where}: missing field 'label'")
    if obj["label"] is not None:
        _emotion(obj, "label", where)
    for key in ("top_score", "threshold"):
        value = obj.get(key)
        if not isinstance(value, (int, float)) or isinstance(value, bool) or not (
            0.0 <= value <= 1.0
        ):
            raise DataError(f"{where}: field {key!r} must be a number in [0, 1]")


def check_labeled_row(obj, where) -> None:
    check_pairs_row(obj, where)
    input_emotion = _emotion(obj, "input_emotion", where)
    target_emotion = _emotion(obj, "target_emotion", where)
    for key, emotion in (("input_range", input_emotion), ("target_range", target_emotion)):
        token = _string(obj, key, where, required=False)
        if token is not None and token != taxonomy.range_of(emotion).token:
            raise DataError(
                f"{where}: field {key!r} ({token!r}) does not match range of {emotion!r}"
            )


def check_eval_row(obj, where) -> None:
    _string(obj, "id", where)
    _string(obj, "prediction", where, allow_empty=True)
    _string(obj, "reference", where, allow_empty=True)
    _emotion(obj, "target_emotion", where)
    _score_map(obj, "prediction_scores", where, required=False)


def check_prediction_row(obj, where) -> None:
    _string(obj, "id", where)
    _string(obj, "prediction", where, allow_empty=True)


VALIDATORS = {
    "pairs": check_pairs_row,
    "scores": check_scores_row,
    "decisions": check_decision_row,
    "labeled": check_labeled_row,
    "eval": check_eval_row,
    "predictions": check_prediction_row,
}


def validate_file(path, schema: str) -> list[str]:
    """All schema violations in a JSONL file, as '<path>:<line>: ...' strings."""
    check = VALIDATORS[schema]
    errors = []
    try:
        rows = read_jsonl(path)
    except DataError as exc:
        return [str(exc)]
    for lineno, obj in rows:
        try:
            check(obj, f"{path}:{lineno}")
        except DataError as exc:
            errors.append(str(exc))
    return errors


# -- domain loaders ----------------------------------------------------------

def load_pairs(path) -> list[ParaphrasePair]:
    pairs = []
    for lineno, obj in read_jsonl(path):
        where = f"{path}:{lineno}"
        check_pairs_row(obj, where)
        try:
            pairs.append(
                ParaphrasePair(
                    id=obj["id"],
                    input_text=obj["input_text"],
                    target_text=obj["target_text"],
                    source=obj.get("source", "other"),
                )
            )
        except PipelineError as exc:
            raise DataError(f"{where}: {exc}") from None
    return pairs


def load_scores(path) -> dict:
    """id -> (text, scores) mapping from a score-vector file."""
    out = {}
    for lineno, obj in read_jsonl(path):
        where = f"{path}:{lineno}"
        check_scores_row(obj, where)
        if obj["id"] in out:
            raise DataError(f"{where}: duplicate id {obj['id']!r}")
        out[obj["id"]] = (obj["text"], obj["scores"])
    return out


def load_decisions(path) -> dict:
    out = {}
    for lineno, obj in read_jsonl(path):
        where = f"{path}:{lineno}"
        check_decision_row(obj, where)
        if obj["id"] in out:
            raise DataError(f"{where}: duplicate id {obj['id']!r}")
        out[obj["id"]] = LabelDecision(
            label=obj["label"], top_score=obj["top_score"], threshold=obj["threshold"]
        )
    return out


def load_labeled(path) -> list[LabeledPair]:
    pairs = []
    for lineno, obj in read_jsonl(path):
        where = f"{path}:{lineno}"
        check_labeled_row(obj, where)
        try:
            pairs.append(
                LabeledPair(
                    id=obj["id"],
                    input_text=obj["input_text"],
                    target_text=obj["target_text"],
                    source=obj.get("source", "other"),
                    input_emotion=obj["input_emotion"],
                    target_emotion=obj["target_emotion"],
                )
            )
        except PipelineError as exc:
            raise DataError(f"{where}: {exc}") from None
    return pairs


def labeled_row(pair: LabeledPair, **extra) -> dict:
    row = {
        "id": pair.id,
        "input_text": pair.input_text,
        "target_text": pair.target_text,
        "source": pair.source,
        "input_emotion": pair.input_emotion,
        "target_emotion": pair.target_emotion,
        "input_range": pair.input_range.token,
        "target_range": pair.target_range.token,
    }
    row.update(extra)
    return row


def decision_row(id: str, decision: LabelDecision) -> dict:
    return {
        "id": id,
        "label": decision.label,
        "top_score": decision.top_score,
        "threshold": decision.threshold,
    }


def load_eval_records(path, threshold: float = 0.5) -> list[EvalRecord]:
    from .labeling import dominant_emotion

    records = []
    for lineno, obj in read_jsonl(path):
        where = f"{path}:{lineno}"
        check_eval_row(obj, where)
        prediction_emotion = None
        if "prediction_scores" in obj:
            prediction_emotion = dominant_emotion(obj["prediction_scores"], threshold).label
        records.append(
            EvalRecord(
                id=obj["id"],
                prediction=obj["prediction"],
                reference=obj["reference"],
                target_emotion=obj["target_emotion"],
                prediction_emotion=prediction_emotion,
            )
        )
    return records
