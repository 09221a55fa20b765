"""Synthetic corpus helpers and primary-CLI plumbing for the scorer tests.

The scorer is exercised strictly through file interfaces: tests write
canonical instance JSONL and a schema pack, expand them with the adaptation
CLI, and read back prediction files. No adaptation-library imports.
"""

import json
import random
import subprocess
import sys
from pathlib import Path

import pytest

SCHEMA = {
    "name": "synth3",
    "classes": ["activates", "inhibits", "binds"],
    "negative_class": None,
    "templates": {
        "activates": "{subj} activates {obj}.",
        "inhibits": "{subj} inhibits {obj}.",
        "binds": "{subj} binds to {obj}.",
    },
    "exclusivity_cliques": [["activates", "inhibits"]],
    "mask_entities": True,
}

TYPES = ("gene", "chemical", "protein")
VERB = {"activates": "activates", "inhibits": "inhibits", "binds": "binds to"}


def write_instances(path: Path, n: int, seed: int, prefix: str) -> None:
    """Class-indicative texts: the premise verb determines the gold class."""
    rng = random.Random(seed)
    with open(path, "w", encoding="utf-8") as f:
        for i in range(n):
            gold = rng.choice(SCHEMA["classes"])
            head_type, tail_type = rng.choice(TYPES), rng.choice(TYPES)
            head = f"{head_type.capitalize()}{rng.randrange(10_000)}"
            tail = f"{tail_type.capitalize()}{rng.randrange(10_000)}"
            while tail == head:
                tail = f"{tail_type.capitalize()}{rng.randrange(10_000)}"
            verb = VERB[gold]
            text = f"{head} {verb} {tail} in assay {rng.randrange(1_000)}."
            tail_start = len(head) + 1 + len(verb) + 1
            f.write(
                json.dumps(
                    {
                        "id": f"{prefix}-{i:04d}",
                        "text": text,
                        "head": {"surface": head, "type": head_type, "spans": [[0, len(head)]]},
                        "tail": {
                            "surface": tail,
                            "type": tail_type,
                            "spans": [[tail_start, tail_start + len(tail)]],
                        },
                        "gold_label": gold,
                        "dataset": "synth3",
                    }
                )
                + "\n"
            )


def renli(*args: str) -> subprocess.CompletedProcess:
    proc = subprocess.run(
        [sys.executable, "-m", "renli.cli", *args], capture_output=True, text=True
    )
    assert proc.returncode == 0, f"renli {' '.join(args)} failed:\n{proc.stderr}"
    return proc


@pytest.fixture(scope="session")
def corpus(tmp_path_factory):
    """Schema pack, instance files, and adapted pair files for the session."""
    root = tmp_path_factory.mktemp("corpus")
    schema = root / "schema.json"
    schema.write_text(json.dumps(SCHEMA), encoding="utf-8")
    train, test = root / "train.jsonl", root / "test.jsonl"
    write_instances(train, 200, seed=1, prefix="tr")
    write_instances(test, 80, seed=2, prefix="te")
    train_pairs = root / "train_pairs.jsonl"
    test_pairs = root / "test_pairs.jsonl"
    renli(
        "adapt", "--schema", str(schema), "--split", str(train),
        "--no-filter", "--out", str(train_pairs),
    )
    renli(
        "adapt", "--schema", str(schema), "--split", str(test), "--split-name", "test",
        "--no-filter", "--no-targets", "--out", str(test_pairs),
    )
    return {
        "root": root,
        "schema": schema,
        "train": train,
        "test": test,
        "train_pairs": train_pairs,
        "test_pairs": test_pairs,
    }
