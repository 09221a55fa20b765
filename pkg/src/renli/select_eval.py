"""Prediction parsing, group-based selection, back-mapping, and micro-F1.

A model scores every pair of an instance independently; selection collapses
those per-pair verdicts back into one RE decision per instance. Grouped mode
keeps only the most confident entailed hypothesis; ungrouped mode keeps all
entailed hypotheses. Instances with no entailed pair abstain, which maps to
the schema's negative class when one exists.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import (
    DuplicateId,
    EmptyGroup,
    MalformedLine,
    MixedInstanceIds,
    UnknownClass,
    UnknownInstanceId,
    UnlabeledInstance,
)
from .ingest import DatasetSplit
from .model import (
    DatasetSchema,
    NLILabel,
    PredictionRecord,
    Probabilities,
    split_pair_id,
)


class ParsedLabel(str, Enum):
    """NLI label recovered from generated text; NONE marks an unmatchable output."""

    ENTAIL = "entail"
    NEUTRAL = "neutral"
    CONTRADICT = "contradict"
    NONE = "none"


# searched in this order; the earliest occurrence in the text wins
_PARSE_TOKENS = (
    ("ent", ParsedLabel.ENTAIL),
    ("con", ParsedLabel.CONTRADICT),
    ("neu", ParsedLabel.NEUTRAL),
)


def parse_nli_label(text: str) -> ParsedLabel:
    """Partial string matching over the first three letters of each label.

    Case-insensitive, anywhere in the string; when several label stems occur
    the one appearing earliest wins. No match yields NONE, which downstream
    behaves like neutral.
    """
    low = text.lower()
    best_pos = None
    best_label = ParsedLabel.NONE
    for token, label in _PARSE_TOKENS:
        pos = low.find(token)
        if pos != -1 and (best_pos is None or pos < best_pos):
            best_pos = pos
            best_label = label
    return best_label


@dataclass(frozen=True)
class SelectionResult:
    """Per-instance outcome of selection; empty classes means abstention."""

    instance_id: str
    classes: tuple[str, ...]

    @property
    def abstained(self) -> bool:
        return not self.classes


@dataclass(frozen=True)
class REPrediction:
    """Back-mapped RE-level prediction for one instance."""

    instance_id: str
    classes: tuple[str, ...]
    abstained: bool = False

    def to_dict(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "classes": list(self.classes),
            "abstained": self.abstained,
        }


def _is_entail(record: PredictionRecord) -> bool:
    if isinstance(record.payload, Probabilities):
        return record.payload.argmax() is NLILabel.ENTAIL
    return parse_nli_label(record.payload.text) is ParsedLabel.ENTAIL


def select_group(
    records: list[PredictionRecord],
    schema: DatasetSchema,
    grouped: bool = True,
) -> SelectionResult:
    """Collapse one instance's pair predictions into a SelectionResult.

    grouped=True: the entailed record with the highest entail probability
    wins; exact ties and confidence-free (generated-text) records fall back
    to schema class order, lowest index first. No entailed record means
    abstention. grouped=False: every entailed hypothesis class is kept.
    """
    if not records:
        raise EmptyGroup()
    parsed = []
    instance_ids = set()
    for record in records:
        instance_id, cls_id = split_pair_id(record.pair_id, schema)
        instance_ids.add(instance_id)
        parsed.append((record, cls_id))
    if len(instance_ids) != 1:
        raise MixedInstanceIds(instance_ids)
    instance_id = next(iter(instance_ids))

    entailed = [(record, cls_id) for record, cls_id in parsed if _is_entail(record)]
    if not grouped:
        classes = sorted({cls_id for _, cls_id in entailed}, key=schema.class_index.get)
        return SelectionResult(instance_id=instance_id, classes=tuple(classes))
    if not entailed:
        return SelectionResult(instance_id=instance_id, classes=())

    def rank(item):
        record, cls_id = item
        confidence = (
            record.payload.entail
            if isinstance(record.payload, Probabilities)
            else float("-inf")
        )
        return (confidence, -schema.class_index[cls_id])

    _, winner = max(entailed, key=rank)
    return SelectionResult(instance_id=instance_id, classes=(winner,))


def group_records(
    records: list[PredictionRecord], schema: DatasetSchema
) -> dict[str, list[PredictionRecord]]:
    """Partition records by instance id, preserving first-seen order."""
    groups: dict[str, list[PredictionRecord]] = {}
    for record in records:
        instance_id, _ = split_pair_id(record.pair_id, schema)
        groups.setdefault(instance_id, []).append(record)
    return groups


def select_all(
    records: list[PredictionRecord],
    schema: DatasetSchema,
    grouped: bool = True,
) -> list[SelectionResult]:
    """Group a whole prediction file and select per instance."""
    return [
        select_group(group, schema, grouped=grouped)
        for group in group_records(records, schema).values()
    ]


def back_map(
    selections: list[SelectionResult], schema: DatasetSchema
) -> list[REPrediction]:
    """Map selections to RE labels; abstentions become the negative class if any."""
    predictions = []
    for selection in selections:
        if selection.abstained:
            classes = (schema.negative_class,) if schema.negative_class else ()
            predictions.append(
                REPrediction(selection.instance_id, classes, abstained=True)
            )
        else:
            predictions.append(
                REPrediction(selection.instance_id, selection.classes, abstained=False)
            )
    return predictions


@dataclass
class ClassStats:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    @property
    def precision(self) -> float:
        return self.tp / (self.tp + self.fp) if self.tp + self.fp else 0.0

    @property
    def recall(self) -> float:
        return self.tp / (self.tp + self.fn) if self.tp + self.fn else 0.0

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r else 0.0

    def to_dict(self) -> dict:
        return {
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
        }


@dataclass
class EvalReport:
    tp: int
    fp: int
    fn: int
    micro_precision: float
    micro_recall: float
    micro_f1: float
    per_class: dict[str, ClassStats] = field(default_factory=dict)
    abstention_count: int = 0

    def to_dict(self) -> dict:
        return {
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "micro_precision": self.micro_precision,
            "micro_recall": self.micro_recall,
            "micro_f1": self.micro_f1,
            "per_class": {c: s.to_dict() for c, s in self.per_class.items()},
            "abstention_count": self.abstention_count,
        }


def evaluate(
    predictions: list[REPrediction],
    gold: DatasetSplit,
    schema: DatasetSchema,
    include_negative: bool = False,
) -> EvalReport:
    """Micro-F1 over positive classes from globally pooled TP/FP/FN.

    Negative-class predictions and abstentions contribute no TP or FP; a
    gold positive nobody predicted is one FN. Multi-class (ungrouped)
    predictions score every emitted class independently. Gold instances
    with no prediction record count as abstentions, matching the automatic
    abstention of instances the feasibility filter emptied out.
    include_negative=True instead scores the negative class like any other.
    """
    gold_by_id: dict[str, str] = {}
    for instance in gold.instances:
        if instance.gold_label is None:
            raise UnlabeledInstance(instance.id)
        gold_by_id[instance.id] = instance.gold_label

    by_id: dict[str, REPrediction] = {}
    for prediction in predictions:
        if prediction.instance_id not in gold_by_id:
            raise UnknownInstanceId(prediction.instance_id)
        if prediction.instance_id in by_id:
            raise DuplicateId(prediction.instance_id)
        for cls_id in prediction.classes:
            if cls_id not in schema.class_index:
                raise UnknownClass(cls_id)
        by_id[prediction.instance_id] = prediction

    negative = schema.negative_class

    def scored(classes) -> list[str]:
        if include_negative:
            return list(classes)
        return [c for c in classes if c != negative]

    per_class = {c: ClassStats() for c in schema.classes if include_negative or c != negative}
    abstentions = 0
    for instance_id, gold_label in gold_by_id.items():
        prediction = by_id.get(instance_id)
        if prediction is None:
            # never scored at all: automatic abstention
            abstentions += 1
            predicted = scored((negative,) if negative else ())
        else:
            if prediction.abstained:
                abstentions += 1
            predicted = scored(prediction.classes)
        for cls_id in predicted:
            if cls_id == gold_label:
                per_class[cls_id].tp += 1
            else:
                per_class[cls_id].fp += 1
        if (include_negative or gold_label != negative) and gold_label not in predicted:
            per_class[gold_label].fn += 1

    tp = sum(s.tp for s in per_class.values())
    fp = sum(s.fp for s in per_class.values())
    fn = sum(s.fn for s in per_class.values())
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return EvalReport(
        tp=tp,
        fp=fp,
        fn=fn,
        micro_precision=precision,
        micro_recall=recall,
        micro_f1=f1,
        per_class=per_class,
        abstention_count=abstentions,
    )


def read_predictions(path: str | Path) -> list[PredictionRecord]:
    records = []
    with open(path, encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                records.append(PredictionRecord.from_dict(json.loads(line)))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise MalformedLine(line_no, f"bad prediction record ({exc!r})") from exc
    return records


def write_predictions(records: list[PredictionRecord], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for record in records:
            f.write(json.dumps(record.to_dict(), ensure_ascii=False))
            f.write("\n")


def write_re_predictions(predictions: list[REPrediction], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for prediction in predictions:
            f.write(json.dumps(prediction.to_dict(), ensure_ascii=False))
            f.write("\n")
