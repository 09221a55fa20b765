"""CLI: train on adapted pairs, score pair files into prediction files."""

from __future__ import annotations

import argparse
import json
import sys

from .data import ScorerError
from .score import score
from .train import TrainConfig, train


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nli-scorer",
        description="small NLI pair classifier over adapted RE corpora",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="fit a classifier on a labeled pair file")
    p.add_argument("--train", required=True, help="adapted pairs JSONL with targets")
    p.add_argument("--dev", help="adapted pairs JSONL with targets, for per-epoch loss")
    p.add_argument("--out", required=True, help="checkpoint directory")
    p.add_argument("--base", help="existing checkpoint to continue training from")
    p.add_argument("--config", help="JSON file of training options (flags override)")
    p.add_argument("--epochs", type=int)
    p.add_argument("--batch-size", type=int)
    p.add_argument("--lr", type=float)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("score", help="write a prediction file for a pair file")
    p.add_argument("--ckpt", required=True, help="checkpoint directory")
    p.add_argument("--pairs", required=True, help="adapted pairs JSONL")
    p.add_argument("--out", required=True, help="prediction JSONL")
    p.add_argument("--batch-size", type=int, default=64)
    p.set_defaults(func=_cmd_score)

    return parser


def _cmd_train(args) -> int:
    options = {}
    if args.config:
        with open(args.config, encoding="utf-8") as f:
            options.update(json.load(f))
    for key in ("epochs", "batch_size", "lr", "seed"):
        value = getattr(args, key)
        if value is not None:
            options[key] = value
    config = TrainConfig.from_dict(options)
    result = train(args.train, args.dev, args.out, config, base=args.base)
    print(f"saved checkpoint to {result.checkpoint}", file=sys.stderr)
    return 0


def _cmd_score(args) -> int:
    n = score(args.ckpt, args.pairs, args.out, batch_size=args.batch_size)
    print(f"scored {n} pairs -> {args.out}", file=sys.stderr)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ScorerError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
