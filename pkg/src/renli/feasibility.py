"""Feasible-hypothesis filtering from observed entity-type pairs.

The index maps each relation class to the set of (head_type, tail_type)
pairs it was observed with in training data. A hypothesis class is feasible
for an instance iff the instance's type pair is in the class's set. Type
pairs are directed: (head, tail), never symmetrized.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import SchemaError, UnlabeledInstance
from .ingest import DatasetSplit
from .model import DatasetSchema

TypePair = tuple[str, str]


@dataclass(frozen=True)
class FeasibilityIndex:
    """Per-class sets of observed (head_type, tail_type) pairs, in schema class order."""

    classes: tuple[str, ...]
    pairs_by_class: dict[str, frozenset[TypePair]]

    def to_dict(self) -> dict:
        # sorted arrays so two builds of the same data diff byte-identically
        return {
            c: sorted(list(p) for p in self.pairs_by_class[c]) for c in self.classes
        }

    @classmethod
    def from_dict(cls, d: dict, schema: DatasetSchema) -> "FeasibilityIndex":
        unknown = [c for c in d if c not in schema.class_index]
        if unknown:
            raise SchemaError(f"index contains classes not in schema: {unknown}")
        return cls(
            classes=schema.classes,
            pairs_by_class={
                c: frozenset((h, t) for h, t in d.get(c, [])) for c in schema.classes
            },
        )


def build_index(train: DatasetSplit, schema: DatasetSchema) -> FeasibilityIndex:
    """Aggregate observed type pairs per gold class over a fully labeled split.

    Deterministic regardless of instance order; classes absent from the
    split map to empty sets.
    """
    pairs: dict[str, set[TypePair]] = {c: set() for c in schema.classes}
    for instance in train.instances:
        if instance.gold_label is None:
            raise UnlabeledInstance(instance.id)
        pairs[instance.gold_label].add(
            (instance.head.entity_type, instance.tail.entity_type)
        )
    return FeasibilityIndex(
        classes=schema.classes,
        pairs_by_class={c: frozenset(p) for c, p in pairs.items()},
    )


def feasible_classes(
    index: FeasibilityIndex, head_type: str, tail_type: str
) -> list[str]:
    """Classes whose observed type-pair set contains (head_type, tail_type), in schema order."""
    pair = (head_type, tail_type)
    return [c for c in index.classes if pair in index.pairs_by_class[c]]


def save_index(index: FeasibilityIndex, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(index.to_dict(), f, indent=1, ensure_ascii=False, sort_keys=True)
        f.write("\n")


def load_index(path: str | Path, schema: DatasetSchema) -> FeasibilityIndex:
    with open(path, encoding="utf-8") as f:
        return FeasibilityIndex.from_dict(json.load(f), schema)
