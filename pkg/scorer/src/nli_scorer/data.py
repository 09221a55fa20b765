"""Wire formats shared with the adaptation toolkit.

The scorer talks to the pipeline through files only: it reads adapted-pair
JSONL (pair_id, premise, hypothesis, optional target) and writes prediction
JSONL (pair_id plus a probability triple over the fixed label order).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

# index order of the classification head, also stored in every checkpoint
LABEL_ORDER = ("entail", "neutral", "contradict")
LABEL_TO_ID = {label: i for i, label in enumerate(LABEL_ORDER)}


class ScorerError(Exception):
    pass


class DataError(ScorerError):
    """Input file violates the pair or prediction contract."""


@dataclass(frozen=True)
class PairRecord:
    pair_id: str
    premise: str
    hypothesis: str
    target: str | None


def read_pairs(path: str | Path, require_targets: bool = False) -> list[PairRecord]:
    records = []
    with open(path, encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                row = json.loads(line)
                record = PairRecord(
                    pair_id=row["pair_id"],
                    premise=row["premise"],
                    hypothesis=row["hypothesis"],
                    target=row.get("target"),
                )
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise DataError(f"{path}:{line_no}: bad pair record ({exc!r})") from exc
            if record.target is not None and record.target not in LABEL_TO_ID:
                raise DataError(
                    f"{path}:{line_no}: target {record.target!r} not one of {LABEL_ORDER}"
                )
            if require_targets and record.target is None:
                raise DataError(f"{path}:{line_no}: pair {record.pair_id!r} has no target")
            records.append(record)
    return records


def write_predictions(rows: list[tuple[str, list[float]]], path: str | Path) -> None:
    """rows: (pair_id, [p_entail, p_neutral, p_contradict]) in input order."""
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for pair_id, probs in rows:
            f.write(json.dumps({"pair_id": pair_id, "probs": list(probs)}))
            f.write("\n")
