"""Deterministic synthetic corpora for demos and verification.

Real RE datasets are licensed separately, so the test suite and demo
scripts run on generated splits: every instance has valid spans (including
Unicode surfaces and occasional multi-span mentions), a gold class, and an
entity-type pair drawn from a per-class pool so the feasibility filter has
structure to find. Everything is seeded; same arguments, same corpus.
"""

from __future__ import annotations

import random

from .ingest import DatasetSplit
from .model import (
    DatasetSchema,
    EntityMention,
    HypothesisTemplate,
    NLILabel,
    PredictionRecord,
    Probabilities,
    RelationInstance,
)

_BASE_TYPES = ("gene", "disease", "chemical", "variant")
_DECOR = ("", "1", "7", "α", "β", "é")


def _type_pool(m: int, entity_types) -> list[str]:
    if entity_types:
        return list(entity_types)
    types = list(_BASE_TYPES)
    while len(types) * len(types) < m:
        types.append(f"type{len(types)}")
    return types


def _allowed_pairs(schema: DatasetSchema, types: list[str]) -> dict[str, list[tuple[str, str]]]:
    # A fixed partition of the type-pair grid across classes, plus one shared
    # pair each, so feasible sets are usually small but sometimes overlap.
    pool = [(a, b) for a in types for b in types]
    m = schema.num_classes
    allowed: dict[str, list[tuple[str, str]]] = {c: [] for c in schema.classes}
    for k, pair in enumerate(pool):
        allowed[schema.classes[k % m]].append(pair)
    for j, c in enumerate(schema.classes):
        extra = pool[(j * 7 + 1) % len(pool)]
        if extra not in allowed[c]:
            allowed[c].append(extra)
    return allowed


def synthetic_split(
    schema: DatasetSchema,
    n: int,
    seed: int = 0,
    name: str = "train",
    entity_types=None,
    multi_span_rate: float = 0.25,
    unlabeled: bool = False,
) -> DatasetSplit:
    """Generate n valid instances for a schema.

    The first instance always carries a positive gold class so oracle
    pipelines never see an all-negative split.
    """
    rng = random.Random(seed)
    types = _type_pool(schema.num_classes, entity_types)
    allowed = _allowed_pairs(schema, types)
    positives = [c for c in schema.classes if c != schema.negative_class]
    instances = []
    for i in range(n):
        if i == 0 and positives:
            gold = positives[0]
        else:
            gold = rng.choice(schema.classes)
        head_type, tail_type = rng.choice(allowed[gold])
        head_surface = f"{head_type.capitalize()}{rng.choice(_DECOR)}{rng.randrange(10_000)}"
        tail_surface = f"{tail_type.capitalize()}{rng.choice(_DECOR)}{rng.randrange(10_000)}"
        while tail_surface == head_surface:
            tail_surface = f"{tail_type.capitalize()}{rng.randrange(10_000)}"
        verb = f"rel{schema.class_index[gold]}"

        pos = 0
        chunks: list[str] = []

        def emit(s: str) -> tuple[int, int]:
            nonlocal pos
            chunks.append(s)
            start = pos
            pos += len(s)
            return (start, pos)

        head_spans = [emit(head_surface)]
        emit(f" {verb} ")
        tail_spans = [emit(tail_surface)]
        emit(f" in case {i}")
        if rng.random() < multi_span_rate:
            emit("; see also ")
            head_spans.append(emit(head_surface))
        emit(".")
        text = "".join(chunks)

        instances.append(
            RelationInstance(
                id=f"{schema.name}-{name}-{i:05d}",
                text=text,
                head=EntityMention(head_surface, head_type, tuple(head_spans)),
                tail=EntityMention(tail_surface, tail_type, tuple(tail_spans)),
                gold_label=None if unlabeled else gold,
                dataset=schema.name,
            )
        )
    return DatasetSplit(name=name, instances=instances)


def synthetic_schema(
    m: int,
    seed: int = 0,
    with_negative: bool | None = None,
    mask_entities: bool | None = None,
) -> DatasetSchema:
    """Random but valid schema with m classes, random cliques, random masking."""
    rng = random.Random(seed)
    classes = tuple(f"c{j:02d}" for j in range(m))
    if with_negative is None:
        with_negative = m >= 2 and rng.random() < 0.5
    negative = classes[0] if with_negative else None
    positives = [c for c in classes if c != negative]
    rng.shuffle(positives)
    cliques = []
    k = 0
    while k + 1 < len(positives) and rng.random() < 0.4:
        size = min(rng.choice((2, 2, 3)), len(positives) - k)
        if size < 2:
            break
        cliques.append(frozenset(positives[k : k + size]))
        k += size
    templates = {}
    for j, c in enumerate(classes):
        style = rng.random()
        if style < 0.1:
            templates[c] = HypothesisTemplate(f"A kind-{j} link between two things is described.")
        elif style < 0.2:
            templates[c] = HypothesisTemplate(f"{{subj}} shows a kind-{j} pattern.")
        else:
            templates[c] = HypothesisTemplate(f"{{subj}} rel{j} {{obj}}.")
    return DatasetSchema(
        name=f"synth{m}s{seed}",
        classes=classes,
        negative_class=negative,
        templates=templates,
        exclusivity_cliques=tuple(cliques),
        mask_entities=rng.random() < 0.5 if mask_entities is None else mask_entities,
    )


_ORACLE_PROBS = {
    NLILabel.ENTAIL: Probabilities(1.0, 0.0, 0.0),
    NLILabel.NEUTRAL: Probabilities(0.0, 1.0, 0.0),
    NLILabel.CONTRADICT: Probabilities(0.0, 0.0, 1.0),
}


def oracle_predictions(pairs) -> list[PredictionRecord]:
    """Perfect-knowledge predictions: each pair's target turned into a crisp simplex."""
    records = []
    for pair in pairs:
        if pair.target is None:
            raise ValueError(f"pair {pair.pair_id} has no target to derive an oracle from")
        records.append(PredictionRecord(pair.pair_id, _ORACLE_PROBS[pair.target]))
    return records
