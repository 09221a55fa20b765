"""Command-line surface for the adaptation pipeline.

Data goes to files (or stdout for reports), progress and warnings go to
stderr. Exit codes: 0 success, 1 usage, 2 validation failure, 3 I/O failure.
Every subcommand is deterministic: identical inputs give byte-identical
outputs, regardless of --jobs.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .adapt import AdaptConfig, AdaptedCorpus, adapt_split, merge, read_pairs, write_pairs
from .errors import ValidationError
from .feasibility import build_index, load_index, save_index
from .ingest import DatasetSplit, load_split, split_stats
from .metaclass import build_matrix, verify_matrix
from .model import BUNDLED_SCHEMAS, load_schema
from .select_eval import (
    back_map,
    evaluate,
    read_predictions,
    select_all,
    write_re_predictions,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage problems; this tool reserves 2 for validation
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: usage: {message}", file=sys.stderr)
        raise SystemExit(1)


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _add_common(p: argparse.ArgumentParser, *, split=False, out_required=False):
    p.add_argument("--schema", required=True, help="bundled schema name or pack path")
    if split:
        p.add_argument("--split", required=True, help="canonical instance JSONL")
        p.add_argument(
            "--split-name",
            choices=("train", "dev", "test"),
            default=None,
            help="override the train/dev/test name inferred from the file name",
        )
    if out_required:
        p.add_argument("--out", required=True, help="output file")
    p.add_argument(
        "--seed", type=int, default=0,
        help="reserved; the pipeline is deterministic and ignores it",
    )


def _load_named_split(args, schema) -> DatasetSplit:
    return load_split(args.split, schema, name=args.split_name)


def _adapt_chunk(payload):
    instances, name, schema, matrix, index, config = payload
    corpus = adapt_split(DatasetSplit(name, instances), schema, matrix, index, config)
    return corpus.pairs, corpus.empty_feasible_count


def _cmd_adapt(args) -> int:
    schema = load_schema(args.schema)
    split = _load_named_split(args, schema)
    matrix = build_matrix(schema)
    config = AdaptConfig(
        use_filter=not args.no_filter,
        use_metaclass=not args.no_metaclass,
        emit_targets=not args.no_targets,
    )
    index = None
    if config.use_filter:
        if not args.index:
            raise _UsageError("--index is required unless --no-filter is given")
        index = load_index(args.index, schema)

    if args.jobs > 1 and len(split.instances) > 1:
        size = max(1, (len(split.instances) + args.jobs - 1) // args.jobs)
        chunks = [
            (split.instances[i : i + size], split.name, schema, matrix, index, config)
            for i in range(0, len(split.instances), size)
        ]
        corpus = AdaptedCorpus()
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for pairs, empties in pool.map(_adapt_chunk, chunks):
                corpus.pairs.extend(pairs)
                corpus.empty_feasible_count += empties
    else:
        corpus = adapt_split(split, schema, matrix, index, config)

    write_pairs(corpus, args.out)
    _log(f"adapted {len(split.instances)} instances -> {len(corpus.pairs)} pairs ({args.out})")
    if corpus.empty_feasible_count:
        _log(
            f"warning: {corpus.empty_feasible_count} instances had no feasible "
            "hypothesis and will abstain downstream"
        )
    return 0


def _cmd_build_index(args) -> int:
    schema = load_schema(args.schema)
    split = _load_named_split(args, schema)
    index = build_index(split, schema)
    save_index(index, args.out)
    covered = sum(1 for c in index.classes if index.pairs_by_class[c])
    _log(f"indexed {len(split.instances)} instances; {covered}/{len(index.classes)} classes covered ({args.out})")
    return 0


def _cmd_select(args) -> int:
    schema = load_schema(args.schema)
    records = read_predictions(args.pred)
    selections = select_all(records, schema, grouped=not args.no_group_selection)
    predictions = back_map(selections, schema)
    write_re_predictions(predictions, args.out)
    abstained = sum(1 for p in predictions if p.abstained)
    _log(f"selected over {len(predictions)} instances ({abstained} abstentions) ({args.out})")
    return 0


def _cmd_eval(args) -> int:
    schema = load_schema(args.schema)
    gold = _load_named_split(args, schema)
    records = read_predictions(args.pred)
    selections = select_all(records, schema, grouped=not args.no_group_selection)
    predictions = back_map(selections, schema)
    report = evaluate(predictions, gold, schema, include_negative=args.include_negative)
    payload = json.dumps(report.to_dict(), indent=1, ensure_ascii=False) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as f:
            f.write(payload)
    else:
        sys.stdout.write(payload)
    _log(
        f"micro-F1 {report.micro_f1:.4f} (P {report.micro_precision:.4f} / "
        f"R {report.micro_recall:.4f}), {report.abstention_count} abstentions"
    )
    return 0


def _cmd_merge(args) -> int:
    corpora = [read_pairs(path) for path in args.inputs]
    merged = merge(corpora)
    write_pairs(merged, args.out)
    _log(f"merged {len(args.inputs)} corpora -> {len(merged.pairs)} pairs ({args.out})")
    return 0


def _cmd_stats(args) -> int:
    schema = load_schema(args.schema)
    split = _load_named_split(args, schema)
    report = split_stats(split, schema)
    payload = json.dumps(report.to_dict(), indent=1, ensure_ascii=False) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as f:
            f.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


def _cmd_verify_matrix(args) -> int:
    names = [args.schema] if args.schema else list(BUNDLED_SCHEMAS)
    failures = 0
    for name in names:
        schema = load_schema(name)
        problems = verify_matrix(schema)
        if problems:
            failures += 1
            print(f"FAIL {schema.name}: {len(problems)} mismatching cells")
            for p in problems[:10]:
                _log(f"  {p}")
        else:
            print(f"PASS {schema.name}")
    return 0 if failures == 0 else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="renli", description="RE-to-NLI corpus adaptation toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("adapt", help="expand an instance file into premise-hypothesis pairs")
    _add_common(p, split=True, out_required=True)
    p.add_argument("--index", help="feasibility index file (from build-index)")
    p.add_argument("--no-filter", action="store_true", help="keep all hypotheses")
    p.add_argument(
        "--no-metaclass", action="store_true",
        help="neutral targets except against the negative class",
    )
    p.add_argument("--no-targets", action="store_true", help="omit NLI targets (unlabeled test data)")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers; output order is unchanged")
    p.set_defaults(func=_cmd_adapt)

    p = sub.add_parser("build-index", help="aggregate feasible type pairs from training data")
    _add_common(p, split=True, out_required=True)
    p.set_defaults(func=_cmd_build_index)

    p = sub.add_parser("select", help="group pair predictions and back-map to RE labels")
    _add_common(p, out_required=True)
    p.add_argument("--pred", required=True, help="prediction JSONL (probs or generated text)")
    p.add_argument(
        "--no-group-selection", action="store_true",
        help="keep every entailed class instead of the most confident one",
    )
    p.set_defaults(func=_cmd_select)

    p = sub.add_parser("eval", help="score predictions against a gold split (micro-F1)")
    _add_common(p, split=True)
    p.add_argument("--pred", required=True, help="prediction JSONL (probs or generated text)")
    p.add_argument("--no-group-selection", action="store_true")
    p.add_argument(
        "--include-negative", action="store_true",
        help="score the negative class like any other class",
    )
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("merge", help="concatenate adapted corpora")
    p.add_argument("inputs", nargs="+", help="pair files to merge, in order")
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0, help="reserved")
    p.set_defaults(func=_cmd_merge)

    p = sub.add_parser("stats", help="per-class and per-type-pair counts for a split")
    _add_common(p, split=True)
    p.add_argument("--out", help="write the stats here instead of stdout")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("verify-matrix", help="check rule-built matrices against fixtures")
    p.add_argument("--schema", help="one schema; default checks every bundled pack")
    p.add_argument("--seed", type=int, default=0, help="reserved")
    p.set_defaults(func=_cmd_verify_matrix)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return 1
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
