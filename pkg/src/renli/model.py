"""Core domain types shared by every stage of the RE-to-NLI pipeline.

All types are immutable values: construct once, share freely. Character
offsets everywhere are Unicode code point offsets (Python string indices),
never bytes, so span files stay portable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Union

from .errors import (
    OverlappingSpans,
    SchemaError,
    SpanOutOfBounds,
    UnknownClass,
    UnknownLabel,
    ValidationError,
)

Span = tuple[int, int]


class NLILabel(str, Enum):
    """Three-way inference target. Parse failures use ParsedLabel.NONE, never this."""

    ENTAIL = "entail"
    NEUTRAL = "neutral"
    CONTRADICT = "contradict"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class EntityMention:
    """One entity with all of its mention spans in the owning text.

    Document-level datasets mention the same entity repeatedly, so a single
    head or tail may carry several (start, end) spans; end is exclusive.
    Spans are normalized to ascending order on construction.
    """

    surface: str
    entity_type: str
    spans: tuple[Span, ...]

    def __post_init__(self):
        norm = tuple(sorted((int(s), int(e)) for s, e in self.spans))
        object.__setattr__(self, "spans", norm)

    def to_dict(self) -> dict:
        return {
            "surface": self.surface,
            "type": self.entity_type,
            "spans": [list(s) for s in self.spans],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EntityMention":
        return cls(
            surface=d["surface"],
            entity_type=d["type"],
            spans=tuple((s[0], s[1]) for s in d["spans"]),
        )


@dataclass(frozen=True)
class RelationInstance:
    """One labeled RE example: a text with a head and tail entity pair."""

    id: str
    text: str
    head: EntityMention
    tail: EntityMention
    gold_label: str | None
    dataset: str

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "text": self.text,
            "head": self.head.to_dict(),
            "tail": self.tail.to_dict(),
            "gold_label": self.gold_label,
            "dataset": self.dataset,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RelationInstance":
        return cls(
            id=d["id"],
            text=d["text"],
            head=EntityMention.from_dict(d["head"]),
            tail=EntityMention.from_dict(d["tail"]),
            gold_label=d.get("gold_label"),
            dataset=d.get("dataset", ""),
        )


def _check_mention(instance_id: str, text: str, mention: EntityMention) -> None:
    prev_end = 0
    for start, end in mention.spans:
        if not (0 <= start < end <= len(text)):
            raise SpanOutOfBounds(
                instance_id, f"({start},{end}) in text of length {len(text)}"
            )
        if start < prev_end:
            raise OverlappingSpans(instance_id, f"at ({start},{end})")
        prev_end = end


def validate_instance(instance: RelationInstance, schema: "DatasetSchema") -> None:
    """Enforce every structural invariant of a RelationInstance.

    Checks span bounds and ordering per mention, head/tail disjointness
    (which also rejects self-relations), and gold-label membership.
    """
    _check_mention(instance.id, instance.text, instance.head)
    _check_mention(instance.id, instance.text, instance.tail)
    merged = sorted(instance.head.spans + instance.tail.spans)
    for (s1, e1), (s2, e2) in zip(merged, merged[1:]):
        if s2 < e1:
            raise OverlappingSpans(
                instance.id, f"head/tail collide at ({s2},{e2})"
            )
    if instance.gold_label is not None and instance.gold_label not in schema.class_index:
        raise UnknownLabel(instance.id, instance.gold_label)


_PLACEHOLDERS = ("{subj}", "{obj}")


@dataclass(frozen=True)
class HypothesisTemplate:
    """A class verbalization with optional {subj} / {obj} placeholders.

    Zero-placeholder templates are legal (drug-interaction style sentences
    that name no specific entity).
    """

    template_text: str

    def __post_init__(self):
        for ph in _PLACEHOLDERS:
            if self.template_text.count(ph) > 1:
                raise SchemaError(
                    f"placeholder {ph} appears more than once in {self.template_text!r}"
                )


@dataclass(frozen=True)
class DatasetSchema:
    """Per-dataset contract: classes, templates, exclusivity structure, masking.

    exclusivity_cliques lists definition-based mutual exclusivity only; the
    negative class (when present) is implicitly exclusive with every positive
    class and never appears in a clique.
    """

    name: str
    classes: tuple[str, ...]
    negative_class: str | None
    templates: dict[str, HypothesisTemplate]
    exclusivity_cliques: tuple[frozenset[str], ...]
    mask_entities: bool
    class_index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "class_index", {c: i for i, c in enumerate(self.classes)}
        )
        self._validate()

    def _validate(self) -> None:
        if len(set(self.classes)) != len(self.classes):
            raise SchemaError(f"{self.name}: duplicate class ids")
        if self.negative_class is not None and self.negative_class not in self.class_index:
            raise SchemaError(f"{self.name}: negative class not in class list")
        missing = [c for c in self.classes if c not in self.templates]
        extra = [c for c in self.templates if c not in self.class_index]
        if missing or extra:
            raise SchemaError(
                f"{self.name}: template/class mismatch (missing={missing}, extra={extra})"
            )
        for clique in self.exclusivity_cliques:
            if len(clique) < 2:
                raise SchemaError(f"{self.name}: clique with fewer than 2 members")
            for c in clique:
                if c not in self.class_index:
                    raise SchemaError(f"{self.name}: clique member {c!r} not a class")
                if c == self.negative_class:
                    raise SchemaError(
                        f"{self.name}: negative class may not appear in a clique"
                    )

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def template_for(self, class_id: str) -> HypothesisTemplate:
        return self.templates[class_id]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "classes": list(self.classes),
            "negative_class": self.negative_class,
            "templates": {c: t.template_text for c, t in self.templates.items()},
            "exclusivity_cliques": [sorted(c) for c in self.exclusivity_cliques],
            "mask_entities": self.mask_entities,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DatasetSchema":
        return cls(
            name=d["name"],
            classes=tuple(d["classes"]),
            negative_class=d.get("negative_class"),
            templates={
                c: HypothesisTemplate(t) for c, t in d["templates"].items()
            },
            exclusivity_cliques=tuple(
                frozenset(c) for c in d.get("exclusivity_cliques", [])
            ),
            mask_entities=bool(d["mask_entities"]),
        )


PAIR_ID_SEP = "::"


def make_pair_id(instance_id: str, hypothesis_class: str) -> str:
    return f"{instance_id}{PAIR_ID_SEP}{hypothesis_class}"


def split_pair_id(pair_id: str, schema: DatasetSchema) -> tuple[str, str]:
    """Recover (instance_id, hypothesis_class) from a pair id.

    Matches the longest schema class that terminates the pair id, so instance
    ids containing the separator stay recoverable.
    """
    best = None
    for cls_id in schema.classes:
        suffix = PAIR_ID_SEP + cls_id
        if pair_id.endswith(suffix):
            if best is None or len(cls_id) > len(best):
                best = cls_id
    if best is None:
        raise UnknownClass(f"<none matching pair id {pair_id!r}>")
    return pair_id[: -len(PAIR_ID_SEP + best)], best


@dataclass(frozen=True)
class PremiseHypothesisPair:
    """One adapted NLI example. pair_id is instance_id + '::' + hypothesis_class."""

    pair_id: str
    instance_id: str
    premise: str
    hypothesis: str
    hypothesis_class: str
    target: NLILabel | None
    dataset: str

    def __post_init__(self):
        expected = make_pair_id(self.instance_id, self.hypothesis_class)
        if self.pair_id != expected:
            raise ValidationError(
                f"pair_id {self.pair_id!r} != instance_id::hypothesis_class {expected!r}"
            )

    def to_dict(self) -> dict:
        return {
            "pair_id": self.pair_id,
            "instance_id": self.instance_id,
            "premise": self.premise,
            "hypothesis": self.hypothesis,
            "hypothesis_class": self.hypothesis_class,
            "target": self.target.value if self.target is not None else None,
            "dataset": self.dataset,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PremiseHypothesisPair":
        target = d.get("target")
        return cls(
            pair_id=d["pair_id"],
            instance_id=d["instance_id"],
            premise=d["premise"],
            hypothesis=d["hypothesis"],
            hypothesis_class=d["hypothesis_class"],
            target=NLILabel(target) if target is not None else None,
            dataset=d.get("dataset", ""),
        )


PROB_TOLERANCE = 1e-6


@dataclass(frozen=True)
class Probabilities:
    """Softmax scores over (entail, neutral, contradict); must sum to 1."""

    entail: float
    neutral: float
    contradict: float

    def __post_init__(self):
        for p in (self.entail, self.neutral, self.contradict):
            if not (0.0 <= p <= 1.0):
                raise ValueError(f"probability {p} outside [0, 1]")
        total = self.entail + self.neutral + self.contradict
        if abs(total - 1.0) > PROB_TOLERANCE:
            raise ValueError(f"probabilities sum to {total}, not 1")

    def argmax(self) -> NLILabel:
        # ties resolve toward the earlier label in (entail, neutral, contradict)
        if self.entail >= self.neutral and self.entail >= self.contradict:
            return NLILabel.ENTAIL
        if self.neutral >= self.contradict:
            return NLILabel.NEUTRAL
        return NLILabel.CONTRADICT


@dataclass(frozen=True)
class GeneratedText:
    """Raw text emitted by a generative model for one pair."""

    text: str


Payload = Union[Probabilities, GeneratedText]


@dataclass(frozen=True)
class PredictionRecord:
    """Model output for one premise-hypothesis pair."""

    pair_id: str
    payload: Payload

    def to_dict(self) -> dict:
        if isinstance(self.payload, Probabilities):
            return {
                "pair_id": self.pair_id,
                "probs": [
                    self.payload.entail,
                    self.payload.neutral,
                    self.payload.contradict,
                ],
            }
        return {"pair_id": self.pair_id, "generated": self.payload.text}

    @classmethod
    def from_dict(cls, d: dict) -> "PredictionRecord":
        if "probs" in d:
            e, n, c = d["probs"]
            return cls(pair_id=d["pair_id"], payload=Probabilities(e, n, c))
        if "generated" in d:
            return cls(pair_id=d["pair_id"], payload=GeneratedText(d["generated"]))
        raise ValueError("prediction record needs either 'probs' or 'generated'")


BUNDLED_SCHEMAS = (
    "bc5cdr",
    "biored",
    "biored_novel",
    "chemprot",
    "ddi13",
    "gad",
    "retacred",
    "semeval",
)


def load_schema(name_or_path: str | Path) -> DatasetSchema:
    """Load a schema pack by bundled name (e.g. 'biored') or by file path."""
    path = Path(name_or_path)
    if path.suffix == ".json" or path.exists():
        data = json.loads(path.read_text(encoding="utf-8"))
    else:
        ref = resources.files(__package__) / "schemas" / f"{name_or_path}.json"
        if not ref.is_file():
            raise SchemaError(
                f"no bundled schema {name_or_path!r} (have: {', '.join(BUNDLED_SCHEMAS)})"
            )
        data = json.loads(ref.read_text(encoding="utf-8"))
    return DatasetSchema.from_dict(data)
