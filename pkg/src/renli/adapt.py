"""Instance-to-pair expansion: the adaptation pipeline itself.

Each instance becomes one premise-hypothesis pair per (feasible) relation
class, in schema class order. Adaptation is a pure function of its inputs;
two runs over the same data produce byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DuplicatePairId, MalformedLine, UnlabeledInstance
from .feasibility import FeasibilityIndex, feasible_classes
from .ingest import DatasetSplit
from .metaclass import ExclusivityMatrix, degrade_matrix, nli_target
from .model import (
    DatasetSchema,
    PremiseHypothesisPair,
    RelationInstance,
    make_pair_id,
)
from .verbalize import build_premise, fill_hypothesis


@dataclass(frozen=True)
class AdaptConfig:
    """Pipeline switches: the ablation axes plus target emission.

    use_metaclass=False degrades the matrix to neutral for every
    contradiction that does not involve the negative class.
    emit_targets=False is for unlabeled test splits.
    """

    use_filter: bool = True
    use_metaclass: bool = True
    emit_targets: bool = True


@dataclass
class AdaptedCorpus:
    """Adapted pairs plus a count of instances the filter emptied out."""

    pairs: list[PremiseHypothesisPair] = field(default_factory=list)
    empty_feasible_count: int = 0

    def __len__(self) -> int:
        return len(self.pairs)


def _effective_matrix(
    matrix: ExclusivityMatrix, schema: DatasetSchema, config: AdaptConfig
) -> ExclusivityMatrix:
    return matrix if config.use_metaclass else degrade_matrix(matrix, schema)


def _expand(
    instance: RelationInstance,
    schema: DatasetSchema,
    matrix: ExclusivityMatrix,
    index: FeasibilityIndex | None,
    config: AdaptConfig,
) -> list[PremiseHypothesisPair]:
    # matrix must already reflect config.use_metaclass
    if config.use_filter:
        if index is None:
            raise ValueError("use_filter=True requires a feasibility index")
        classes = feasible_classes(
            index, instance.head.entity_type, instance.tail.entity_type
        )
    else:
        classes = list(schema.classes)
    if config.emit_targets and instance.gold_label is None:
        raise UnlabeledInstance(instance.id)
    premise = build_premise(instance, schema)
    pairs = []
    for cls_id in classes:
        target = None
        if config.emit_targets:
            target = nli_target(matrix, instance.gold_label, cls_id)
        pairs.append(
            PremiseHypothesisPair(
                pair_id=make_pair_id(instance.id, cls_id),
                instance_id=instance.id,
                premise=premise,
                hypothesis=fill_hypothesis(schema.template_for(cls_id), instance, schema),
                hypothesis_class=cls_id,
                target=target,
                dataset=instance.dataset or schema.name,
            )
        )
    return pairs


def adapt_instance(
    instance: RelationInstance,
    schema: DatasetSchema,
    matrix: ExclusivityMatrix,
    index: FeasibilityIndex | None = None,
    config: AdaptConfig = AdaptConfig(),
) -> list[PremiseHypothesisPair]:
    """Expand one instance into its premise-hypothesis pairs, schema class order."""
    return _expand(instance, schema, _effective_matrix(matrix, schema, config), index, config)


def adapt_split(
    split: DatasetSplit,
    schema: DatasetSchema,
    matrix: ExclusivityMatrix,
    index: FeasibilityIndex | None = None,
    config: AdaptConfig = AdaptConfig(),
) -> AdaptedCorpus:
    """Adapt every instance, concatenating per-instance pairs in input order.

    Instances whose type pair admits no feasible class emit zero pairs and
    are tallied in empty_feasible_count; downstream they surface as
    abstentions.
    """
    effective = _effective_matrix(matrix, schema, config)
    corpus = AdaptedCorpus()
    for instance in split.instances:
        pairs = _expand(instance, schema, effective, index, config)
        if not pairs:
            corpus.empty_feasible_count += 1
        corpus.pairs.extend(pairs)
    return corpus


def merge(corpora: list[AdaptedCorpus]) -> AdaptedCorpus:
    """Concatenate corpora, preserving order; (dataset, pair_id) must be unique."""
    merged = AdaptedCorpus()
    seen: set[tuple[str, str]] = set()
    for corpus in corpora:
        for pair in corpus.pairs:
            key = (pair.dataset, pair.pair_id)
            if key in seen:
                raise DuplicatePairId(pair.dataset, pair.pair_id)
            seen.add(key)
            merged.pairs.append(pair)
        merged.empty_feasible_count += corpus.empty_feasible_count
    return merged


def write_pairs(corpus: AdaptedCorpus, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for pair in corpus.pairs:
            f.write(json.dumps(pair.to_dict(), ensure_ascii=False))
            f.write("\n")


def read_pairs(path: str | Path) -> AdaptedCorpus:
    corpus = AdaptedCorpus()
    with open(path, encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                corpus.pairs.append(PremiseHypothesisPair.from_dict(json.loads(line)))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise MalformedLine(line_no, f"bad pair record ({exc!r})") from exc
    return corpus
