"""Drive the whole pipeline through the command-line interface.

Everything here shells out to the installed `renli` entry point, exercising
the same wire formats an external scorer would consume and produce.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

from renli import (
    load_schema,
    oracle_predictions,
    read_pairs,
    synthetic_split,
    write_predictions,
    write_split,
)


def run(*args):
    print("$ renli", " ".join(args))
    proc = subprocess.run(
        [sys.executable, "-m", "renli.cli", *args], capture_output=True, text=True
    )
    for stream in (proc.stdout, proc.stderr):
        if stream.strip():
            print("  " + stream.strip().replace("\n", "\n  "))
    if proc.returncode != 0:
        raise SystemExit(f"command failed with {proc.returncode}")
    return proc


work = Path(tempfile.mkdtemp(prefix="renli-demo-"))
schema = load_schema("chemprot")
write_split(synthetic_split(schema, 80, seed=77), work / "train.jsonl")
write_split(synthetic_split(schema, 40, seed=78, name="test"), work / "test.jsonl")

run("verify-matrix", "--schema", "chemprot")
run("stats", "--schema", "chemprot", "--split", str(work / "train.jsonl"), "--out", str(work / "stats.json"))
run("build-index", "--schema", "chemprot", "--split", str(work / "train.jsonl"), "--out", str(work / "idx.json"))
run(
    "adapt", "--schema", "chemprot",
    "--split", str(work / "test.jsonl"), "--index", str(work / "idx.json"),
    "--out", str(work / "pairs.jsonl"),
)

# stand in for a real model: oracle probabilities over the adapted pairs
corpus = read_pairs(work / "pairs.jsonl")
write_predictions(oracle_predictions(corpus.pairs), work / "preds.jsonl")

run(
    "select", "--schema", "chemprot",
    "--pred", str(work / "preds.jsonl"), "--out", str(work / "selected.jsonl"),
)
run(
    "eval", "--schema", "chemprot",
    "--split", str(work / "test.jsonl"), "--split-name", "test",
    "--pred", str(work / "preds.jsonl"), "--out", str(work / "report.json"),
)

report = json.loads((work / "report.json").read_text())
print(f"\nreport: micro-F1 {report['micro_f1']:.3f}, files under {work}")
if report["abstention_count"]:
    print(
        f"note: {report['abstention_count']} test instances had type pairs never "
        "seen in training, so the filter emitted no hypotheses for them and they "
        "abstained -- the known false-negative mode of feasibility filtering."
    )
