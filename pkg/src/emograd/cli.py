"""Command-line entry point for the reconstruction and evaluation workflows.

Exit codes: 0 success, 1 data errors, 2 configuration errors. Every file
write is atomic, and identical argv + input files produce identical output
bytes and stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import labeling, metrics, pipeline, schemas, taxonomy, vader
from .pipeline import PipelineError, PrefixError, PrefixStyle
from .schemas import DataError
from .vader import LexiconError


class ConfigError(ValueError):
    pass


def _fraction(value: str) -> float:
    f = float(value)
    if not 0.0 < f < 1.0:
        raise argparse.ArgumentTypeError(f"must be in (0, 1), got {f}")
    return f


def _closed_fraction(value: str) -> float:
    f = float(value)
    if not 0.0 <= f <= 1.0:
        raise argparse.ArgumentTypeError(f"must be in [0, 1], got {f}")
    return f


def _threshold(value: str) -> float:
    f = float(value)
    if not 0.0 <= f <= 1.0:
        raise argparse.ArgumentTypeError(f"must be in [0, 1], got {f}")
    return f


def _cap(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {n}")
    return n


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("EMOGRAD_SEED")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ConfigError(f"EMOGRAD_SEED must be an integer, got {env!r}") from None
    return 42


def _print_json(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False, sort_keys=True))


def _decisions_from_scores(path, threshold):
    scores = schemas.load_scores(path)
    return {
        id: labeling.dominant_emotion(score_map, threshold)
        for id, (_text, score_map) in scores.items()
    }


def _load_both_decisions(args):
    if args.input_decisions and args.target_decisions:
        return schemas.load_decisions(args.input_decisions), schemas.load_decisions(
            args.target_decisions
        )
    if args.input_scores and args.target_scores:
        return (
            _decisions_from_scores(args.input_scores, args.threshold),
            _decisions_from_scores(args.target_scores, args.threshold),
        )
    raise ConfigError(
        "either --input-scores/--target-scores or --input-decisions/--target-decisions required"
    )


def cmd_label(args) -> int:
    scores = schemas.load_scores(args.scores)
    rows = [
        schemas.decision_row(id, labeling.dominant_emotion(score_map, args.threshold))
        for id, (_text, score_map) in scores.items()
    ]
    schemas.write_jsonl(args.out, rows)
    return 0


def _reconstruct_stages(args):
    pairs = schemas.load_pairs(args.pairs)
    input_decisions, target_decisions = _load_both_decisions(args)
    labeled, rejected = pipeline.join_labels(pairs, input_decisions, target_decisions)
    filtered = pipeline.filter_transitions(labeled)
    lowered = pipeline.orient_lowering(filtered, order=args.intensity_order)
    if args.graph_valid_only:
        lowered = pipeline.graph_valid_only(lowered, taxonomy.build_transition_graph())
    return pairs, labeled, rejected, lowered


def cmd_reconstruct(args) -> int:
    pairs, labeled, rejected, lowered = _reconstruct_stages(args)
    schemas.write_jsonl(args.out, [schemas.labeled_row(p) for p in lowered])
    if args.rejected_out:
        schemas.write_jsonl(
            args.rejected_out, [{"id": r.id, "reason": r.reason} for r in rejected]
        )

    stats = pipeline.compute_stats(pairs, labeled, lowered).to_dict()
    stats["rejected"] = len(rejected)

    if args.full:
        if not args.out_dir:
            raise ConfigError("--full requires --out-dir")
        seed = _resolve_seed(args)
        os.makedirs(args.out_dir, exist_ok=True)
        train, test = pipeline.split(lowered, args.fraction, seed)
        train, test = pipeline.cap_few_shot(train, test, args.cap_train, args.cap_test)
        style = PrefixStyle(args.style)
        for name, subset in (("train", train), ("test", test)):
            schemas.write_jsonl(
                os.path.join(args.out_dir, f"{name}.jsonl"),
                [schemas.labeled_row(p) for p in subset],
            )
            prefixed = [pipeline.make_prefix(p, style) for p in subset]
            schemas.write_tsv(
                os.path.join(args.out_dir, f"{name}.tsv"),
                [(ex.model_input, ex.target_text) for ex in prefixed],
            )
        stats["seed"] = seed
        stats["train_size"] = len(train)
        stats["test_size"] = len(test)

    _print_json(stats)
    return 0


def cmd_split(args) -> int:
    seed = _resolve_seed(args)
    labeled = schemas.load_labeled(args.infile)
    train, test = pipeline.split(labeled, args.fraction, seed)
    schemas.write_jsonl(args.train_out, [schemas.labeled_row(p) for p in train])
    schemas.write_jsonl(args.test_out, [schemas.labeled_row(p) for p in test])
    _print_json({"seed": seed, "train_size": len(train), "test_size": len(test)})
    return 0


def cmd_cap(args) -> int:
    train = schemas.load_labeled(args.train_in)
    test = schemas.load_labeled(args.test_in)
    train, test = pipeline.cap_few_shot(train, test, args.cap_train, args.cap_test)
    schemas.write_jsonl(args.train_out, [schemas.labeled_row(p) for p in train])
    schemas.write_jsonl(args.test_out, [schemas.labeled_row(p) for p in test])
    _print_json({"train_size": len(train), "test_size": len(test)})
    return 0


def cmd_prefix(args) -> int:
    labeled = schemas.load_labeled(args.infile)
    style = PrefixStyle(args.style)
    prefixed = [pipeline.make_prefix(p, style) for p in labeled]
    schemas.write_tsv(args.out, [(ex.model_input, ex.target_text) for ex in prefixed])
    return 0


def cmd_select_target(args) -> int:
    seed = _resolve_seed(args)
    graph = taxonomy.build_transition_graph(include_cross_cluster=args.cross_cluster)
    targets = taxonomy.lowering_targets(graph, args.emotion)
    selected = taxonomy.select_target(graph, args.emotion, seed, fallback=args.fallback)
    _print_json(
        {
            "emotion": args.emotion,
            "targets": list(targets),
            "selected": selected,
            "fallback": args.fallback,
            "seed": seed,
        }
    )
    return 0


def cmd_case_study(args) -> int:
    seed = _resolve_seed(args)
    labeled = schemas.load_labeled(args.infile)
    graph = taxonomy.build_transition_graph()
    results = pipeline.retarget_case_study(labeled, graph, seed, args.fraction)
    schemas.write_jsonl(
        args.out,
        [
            schemas.labeled_row(r.pair, retargeted=r.retargeted, drawn_target=r.drawn_target)
            for r in results
        ],
    )
    _print_json(
        {
            "n_records": len(results),
            "retargeted": sum(1 for r in results if r.retargeted),
            "kept_original_on_neutral_draw": sum(
                1 for r in results if r.retargeted and r.drawn_target == taxonomy.NEUTRAL
            ),
            "fraction": args.fraction,
            "seed": seed,
        }
    )
    return 0


def _report_table(report: metrics.EvalReport) -> str:
    groups = f"{'':<12}{'Emotion-Transition':^20}{'Paraphrasing':^30}"
    header = (
        f"{'':<12}{'Exact-SR':>10}{'Exact-FE':>10}{'BLEU':>10}{'R-L':>10}{'METEOR':>10}"
    )
    values = (
        f"{'scores':<12}"
        f"{report.exact_sr:>10.3f}{report.exact_fe:>10.3f}"
        f"{report.bleu:>10.3f}{report.rouge_l:>10.3f}{report.meteor:>10.3f}"
    )
    counts = f"records: {report.n_records}  with prediction label: {report.n_labeled}"
    return "\n".join([groups, header, values, counts])


def cmd_evaluate(args) -> int:
    records = schemas.load_eval_records(args.pred, threshold=args.threshold)
    report = metrics.evaluate(records)
    payload = {
        "report": report.to_dict(),
        "records": metrics.per_record_scores(records),
        "threshold": args.threshold,
    }
    if args.out:
        schemas.write_json(args.out, payload)
    print(_report_table(report))
    return 0


def cmd_stats(args) -> int:
    pairs, labeled, rejected, lowered = _reconstruct_stages(args)
    stats = pipeline.compute_stats(pairs, labeled, lowered).to_dict()
    stats["rejected"] = len(rejected)
    if args.out:
        schemas.write_json(args.out, stats)
    _print_json(stats)
    return 0


def cmd_vader(args) -> int:
    if args.lexicon or args.rules:
        if not (args.lexicon and args.rules):
            raise ConfigError("--lexicon and --rules must be given together")
        lexicon = vader.load_lexicon(args.lexicon, args.rules)
    else:
        lexicon = vader.default_lexicon()

    if args.text is not None:
        _print_json(vader.score_text(lexicon, args.text).to_dict())
        return 0

    rows = []
    for lineno, obj in schemas.read_jsonl(args.infile):
        if "text" not in obj or not isinstance(obj["text"], str):
            raise DataError(f"{args.infile}:{lineno}: missing string field 'text'")
        row = vader.score_text(lexicon, obj["text"]).to_dict()
        if "id" in obj:
            row["id"] = obj["id"]
        rows.append(row)
    if args.out:
        schemas.write_jsonl(args.out, rows)
    else:
        for row in rows:
            _print_json(row)
    return 0


def cmd_export_taxonomy(args) -> int:
    graph = taxonomy.build_transition_graph(include_cross_cluster=args.cross_cluster)
    doc = taxonomy.export_taxonomy(graph)
    if args.out:
        schemas.write_json(args.out, doc)
    else:
        print(json.dumps(doc, ensure_ascii=False, sort_keys=True, indent=2))
    return 0


def cmd_validate(args) -> int:
    errors = schemas.validate_file(args.infile, args.schema)
    if errors:
        for line in errors:
            print(line, file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emograd",
        description="Emotion-transition dataset reconstruction and evaluation toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_seed(p):
        p.add_argument(
            "--seed", type=int, default=None, help="RNG seed (default: $EMOGRAD_SEED or 42)"
        )

    p = sub.add_parser("label", help="apply dominance-threshold labeling to score vectors")
    p.add_argument("--scores", required=True, help="score-vector JSONL: {id, text, scores}")
    p.add_argument("--threshold", type=_threshold, default=0.5)
    p.add_argument("--out", required=True, help="decisions JSONL output")
    p.set_defaults(func=cmd_label)

    def add_reconstruct_inputs(p):
        p.add_argument("--pairs", required=True, help="pairs JSONL: {id, input_text, target_text, source}")
        p.add_argument("--input-scores", help="score vectors for input texts")
        p.add_argument("--target-scores", help="score vectors for target texts")
        p.add_argument("--input-decisions", help="pre-labeled decisions for input texts")
        p.add_argument("--target-decisions", help="pre-labeled decisions for target texts")
        p.add_argument("--threshold", type=_threshold, default=0.5)
        p.add_argument("--intensity-order", choices=["tier", "median"], default="tier")
        p.add_argument("--graph-valid-only", action="store_true",
                       help="keep only transitions that are edges of the lowering graph")

    p = sub.add_parser("reconstruct", help="label, filter, and orient a paraphrase dataset")
    add_reconstruct_inputs(p)
    p.add_argument("--out", required=True, help="oriented labeled JSONL output")
    p.add_argument("--rejected-out", help="optional JSONL of rejected ids with reasons")
    p.add_argument("--full", action="store_true", help="also split, cap, and prefix")
    p.add_argument("--out-dir", help="output directory for --full artifacts")
    p.add_argument("--fraction", type=_fraction, default=0.8)
    p.add_argument("--cap-train", type=_cap, default=12)
    p.add_argument("--cap-test", type=_cap, default=3)
    p.add_argument("--style", choices=[s.value for s in PrefixStyle], default="fine")
    add_seed(p)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("split", help="deterministic train/test split")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--fraction", type=_fraction, default=0.8)
    p.add_argument("--train-out", required=True)
    p.add_argument("--test-out", required=True)
    add_seed(p)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("cap", help="cap per-transition example counts")
    p.add_argument("--train-in", required=True)
    p.add_argument("--test-in", required=True)
    p.add_argument("--cap-train", type=_cap, default=12)
    p.add_argument("--cap-test", type=_cap, default=3)
    p.add_argument("--train-out", required=True)
    p.add_argument("--test-out", required=True)
    p.set_defaults(func=cmd_cap)

    p = sub.add_parser("prefix", help="emit prefixed two-column training TSV")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--style", choices=[s.value for s in PrefixStyle], default="fine")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_prefix)

    p = sub.add_parser("select-target", help="draw a lowering target emotion")
    p.add_argument("--emotion", required=True, choices=taxonomy.EMOTIONS, metavar="EMOTION")
    p.add_argument("--fallback", choices=taxonomy.EMOTIONS, metavar="EMOTION")
    p.add_argument("--cross-cluster", action="store_true")
    add_seed(p)
    p.set_defaults(func=cmd_select_target)

    p = sub.add_parser("case-study", help="re-select target emotions for a seeded subset")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--fraction", type=_closed_fraction, default=0.35)
    p.add_argument("--out", required=True)
    add_seed(p)
    p.set_defaults(func=cmd_case_study)

    p = sub.add_parser("evaluate", help="score predictions against references")
    p.add_argument("--pred", required=True, help="eval JSONL: {id, prediction, reference, target_emotion, prediction_scores}")
    p.add_argument("--threshold", type=_threshold, default=0.5)
    p.add_argument("--out", help="JSON report output")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("stats", help="dataset statistics without writing outputs")
    add_reconstruct_inputs(p)
    p.add_argument("--out", help="optional JSON output")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("vader", help="sentiment-intensity scores for texts")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--text")
    group.add_argument("--input", dest="infile", help="JSONL with a 'text' field per row")
    p.add_argument("--lexicon", help="alternative token<TAB>valence lexicon file")
    p.add_argument("--rules", help="alternative booster/negation/idiom JSON")
    p.add_argument("--out", help="optional JSONL output (default: stdout)")
    p.set_defaults(func=cmd_vader)

    p = sub.add_parser("export-taxonomy", help="dump the taxonomy as one JSON document")
    p.add_argument("--out")
    p.add_argument("--cross-cluster", action="store_true")
    p.set_defaults(func=cmd_export_taxonomy)

    p = sub.add_parser("validate", help="check a JSONL file against a schema")
    p.add_argument("--schema", required=True, choices=sorted(schemas.VALIDATORS))
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (
        DataError,
        PipelineError,
        PrefixError,
        LexiconError,
        metrics.MetricError,
        taxonomy.UnknownEmotionError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
