"""Loading, validating, and summarizing canonical instance files.

The canonical format is JSONL, one RelationInstance per line. No converters
from native dataset formats live here; produce the canonical JSONL upstream.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import DuplicateId, MalformedLine, UnlabeledInstance
from .model import DatasetSchema, RelationInstance, validate_instance

SPLIT_NAMES = ("train", "dev", "test")


@dataclass
class DatasetSplit:
    """A named collection of validated instances (train, dev, or test)."""

    name: str
    instances: list[RelationInstance]

    def __len__(self) -> int:
        return len(self.instances)


@dataclass
class StatsReport:
    total: int
    per_class: dict[str, int]
    per_type_pair: dict[tuple[str, str], int]

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "per_class": dict(self.per_class),
            "per_type_pair": [
                {"head_type": h, "tail_type": t, "count": n}
                for (h, t), n in sorted(self.per_type_pair.items())
            ],
        }


def infer_split_name(path: str | Path) -> str:
    """Guess train/dev/test from the file stem; default to train (strictest)."""
    tokens = re.split(r"[^a-zA-Z]+", Path(path).stem.lower())
    for name in SPLIT_NAMES:
        if name in tokens:
            return name
    return "train"


def load_split(
    path: str | Path,
    schema: DatasetSchema,
    name: str | None = None,
) -> DatasetSplit:
    """Load and validate a canonical JSONL instance file.

    Every core invariant is enforced per line. Instances without a gold
    label are accepted only when the split is named 'test'.
    """
    if name is None:
        name = infer_split_name(path)
    if name not in SPLIT_NAMES:
        raise ValueError(f"split name must be one of {SPLIT_NAMES}, got {name!r}")
    instances: list[RelationInstance] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedLine(line_no, f"invalid JSON ({exc.msg})") from exc
            try:
                instance = RelationInstance.from_dict(record)
            except (KeyError, TypeError, IndexError, ValueError) as exc:
                raise MalformedLine(line_no, f"bad record shape ({exc!r})") from exc
            if instance.id in seen:
                raise DuplicateId(instance.id)
            seen.add(instance.id)
            validate_instance(instance, schema)
            if instance.gold_label is None and name != "test":
                raise UnlabeledInstance(instance.id)
            instances.append(instance)
    return DatasetSplit(name=name, instances=instances)


def write_split(split: DatasetSplit, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for instance in split.instances:
            f.write(json.dumps(instance.to_dict(), ensure_ascii=False))
            f.write("\n")


def split_stats(split: DatasetSplit, schema: DatasetSchema) -> StatsReport:
    """Per-class and per-entity-type-pair instance counts."""
    per_class = {c: 0 for c in schema.classes}
    per_type_pair: dict[tuple[str, str], int] = {}
    for instance in split.instances:
        if instance.gold_label is not None:
            per_class[instance.gold_label] += 1
        key = (instance.head.entity_type, instance.tail.entity_type)
        per_type_pair[key] = per_type_pair.get(key, 0) + 1
    return StatsReport(
        total=len(split.instances),
        per_class=per_class,
        per_type_pair=per_type_pair,
    )
