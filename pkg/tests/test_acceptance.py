"""Acceptance gate: every release-blocking criterion, one test each.

Run with `pytest tests/test_acceptance.py -v -s` to see one PASS/FAIL line
per criterion. Criteria cover matrix fidelity, adaptation invertibility,
filter recall, expansion arithmetic, the oracle end-to-end loop, selection
semantics, scorer equivalence, parsing, and byte determinism, each with the
runtime bound it must meet.
"""

import random
import time

from renli import (
    AdaptConfig,
    BUNDLED_SCHEMAS,
    NLILabel,
    ParsedLabel,
    PredictionRecord,
    Probabilities,
    adapt_split,
    back_map,
    build_index,
    build_matrix,
    evaluate,
    feasible_classes,
    load_matrix_fixture,
    load_schema,
    oracle_predictions,
    parse_nli_label,
    select_all,
    select_group,
    synthetic_schema,
    synthetic_split,
    write_split,
)
from renli.cli import main as cli_main
from renli.ingest import DatasetSplit
from renli.select_eval import REPrediction


def _report(criterion: str, ok: bool, detail: str = ""):
    print(f"\n[acceptance] {criterion}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    assert ok, f"{criterion}: {detail}"


def test_c1_matrix_fidelity():
    """Rule-built matrices equal the hand-encoded fixtures, cell for cell, <1s."""
    start = time.perf_counter()
    checked = 0
    mismatches = []
    for name in BUNDLED_SCHEMAS:
        schema = load_schema(name)
        built = build_matrix(schema)
        fixture = load_matrix_fixture(name)
        assert built.classes == fixture.classes, name
        m = len(built.classes)
        for i in range(m):
            for j in range(m):
                checked += 1
                if built.cells[i][j] is not fixture.cells[i][j]:
                    mismatches.append((name, built.classes[i], built.classes[j]))
    elapsed = time.perf_counter() - start
    _report(
        "C1 matrix fidelity",
        not mismatches and elapsed < 1.0,
        f"({len(BUNDLED_SCHEMAS)} schemas, {checked} cells, {elapsed:.3f}s, "
        f"{len(mismatches)} mismatches)",
    )


def test_c2_round_trip_invertibility():
    """Each labeled instance's single entailed pair recovers its gold class, <5s."""
    start = time.perf_counter()
    total = 0
    recovered = 0
    plans = [(40, 0, 250), (25, 1, 250), (10, 2, 250), (3, 3, 250)]
    for m, seed, n in plans:
        schema = synthetic_schema(m, seed=seed)
        split = synthetic_split(schema, n, seed=seed + 500)
        matrix = build_matrix(schema)
        index = build_index(split, schema)
        for config in (AdaptConfig(use_filter=True), AdaptConfig(use_filter=False)):
            corpus = adapt_split(split, schema, matrix, index if config.use_filter else None, config)
            entail_by_instance = {}
            for pair in corpus.pairs:
                if pair.target is NLILabel.ENTAIL:
                    entail_by_instance.setdefault(pair.instance_id, []).append(
                        pair.hypothesis_class
                    )
            for inst in split.instances:
                total += 1
                if entail_by_instance.get(inst.id) == [inst.gold_label]:
                    recovered += 1
    elapsed = time.perf_counter() - start
    _report(
        "C2 round-trip invertibility",
        recovered == total and elapsed < 5.0,
        f"({recovered}/{total} instances over schemas up to m=40, both filter modes, {elapsed:.3f}s)",
    )


def test_c3_filter_recall_on_self():
    """An index built from a split never excludes that split's own gold classes."""
    violations = 0
    total = 0
    for seed in range(5):
        schema = synthetic_schema(6 + seed * 7, seed=seed)
        split = synthetic_split(schema, 200, seed=seed + 60)
        index = build_index(split, schema)
        for inst in split.instances:
            total += 1
            feasible = feasible_classes(index, inst.head.entity_type, inst.tail.entity_type)
            if inst.gold_label not in feasible:
                violations += 1
    _report(
        "C3 filter recall on self",
        violations == 0 and total == 1000,
        f"({violations} violations over {total} instances)",
    )


def test_c4_expansion_arithmetic():
    """Pair counts: |split| * m unfiltered; sum of per-instance feasible sets filtered."""
    ok = True
    details = []
    for m, seed in ((8, 11), (15, 12)):
        schema = synthetic_schema(m, seed=seed)
        split = synthetic_split(schema, 120, seed=seed + 40)
        matrix = build_matrix(schema)
        index = build_index(split, schema)

        unfiltered = adapt_split(split, schema, matrix, config=AdaptConfig(use_filter=False))
        ok &= len(unfiltered.pairs) == len(split.instances) * schema.num_classes

        filtered = adapt_split(split, schema, matrix, index)
        # brute-force oracle straight off the raw training data
        oracle_count = 0
        for inst in split.instances:
            for cls in schema.classes:
                if any(
                    other.gold_label == cls
                    and other.head.entity_type == inst.head.entity_type
                    and other.tail.entity_type == inst.tail.entity_type
                    for other in split.instances
                ):
                    oracle_count += 1
        ok &= len(filtered.pairs) == oracle_count
        details.append(f"m={m}: {len(unfiltered.pairs)} unfiltered, {len(filtered.pairs)} filtered")
    _report("C4 expansion arithmetic", ok, f"({'; '.join(details)})")


def test_c5_oracle_end_to_end():
    """Gold-derived probabilities drive select->back-map->evaluate to F1 = 1.0."""
    scores = {}
    for name in BUNDLED_SCHEMAS:
        schema = load_schema(name)
        split = synthetic_split(schema, 60, seed=7)
        matrix = build_matrix(schema)
        index = build_index(split, schema)
        corpus = adapt_split(split, schema, matrix, index)
        records = oracle_predictions(corpus.pairs)
        selections = select_all(records, schema, grouped=True)
        predictions = back_map(selections, schema)
        report = evaluate(predictions, split, schema)
        scores[name] = report.micro_f1
    ok = all(f1 == 1.0 for f1 in scores.values())
    _report(
        "C5 oracle end-to-end",
        ok,
        "(" + ", ".join(f"{k}={v:.1f}" for k, v in scores.items()) + ")",
    )


def test_c6_group_selection_semantics():
    """Two-entail family: grouped takes the argmax, ungrouped takes both;
    the winner is invariant under order-preserving remaps of entail scores."""
    schema = load_schema("biored")
    rng = random.Random(99)
    trials = 10_000
    ok = True
    for _ in range(trials):
        cls_a, cls_b = rng.sample(list(schema.classes), 2)
        pa, pb = rng.uniform(0.51, 1.0), rng.uniform(0.51, 1.0)
        while pa == pb:
            pb = rng.uniform(0.51, 1.0)

        def rec(cls, p):
            rest = 1.0 - p
            n = rng.uniform(0.0, rest)
            return PredictionRecord(f"x::{cls}", Probabilities(p, n, rest - n))

        records = [rec(cls_a, pa), rec(cls_b, pb)]
        expected = cls_a if pa > pb else cls_b
        grouped = select_group(records, schema, grouped=True)
        ungrouped = select_group(records, schema, grouped=False)
        ok &= grouped.classes == (expected,)
        ok &= sorted(ungrouped.classes) == sorted((cls_a, cls_b))

        # monotone rescaling: fresh scores with the same order
        qa, qb = sorted((rng.uniform(0.51, 1.0), rng.uniform(0.51, 1.0)))
        if pa > pb:
            qa, qb = qb, qa
        remapped = [rec(cls_a, qa), rec(cls_b, qb)]
        ok &= select_group(remapped, schema, grouped=True).classes == (expected,)
        if not ok:
            break
    _report("C6 group-selection semantics", ok, f"({trials} random probability draws)")


def test_c7_evaluation_oracle_equivalence():
    """evaluate() matches an independent confusion-matrix scorer exactly."""

    def oracle(pred_map, gold_map, schema, include_negative):
        neg = schema.negative_class
        scored = [c for c in schema.classes if include_negative or c != neg]
        tp = fp = fn = 0
        for cls in scored:
            predicted = {iid for iid, classes in pred_map.items() if cls in classes}
            gold_ids = {iid for iid, g in gold_map.items() if g == cls}
            tp += len(predicted & gold_ids)
            fp += len(predicted - gold_ids)
            fn += len(gold_ids - predicted)
        return tp, fp, fn

    rng = random.Random(4321)
    ok = True
    from conftest import make_instance

    for trial in range(100):
        m = rng.randint(2, 5)
        schema = synthetic_schema(m, seed=trial, mask_entities=False)
        n = rng.randint(1, 50)
        labels = [rng.choice(schema.classes) for _ in range(n)]
        gold = DatasetSplit(
            "test",
            [make_instance(f"i{k}", gold=labels[k], dataset=schema.name) for k in range(n)],
        )
        include_negative = bool(trial % 2)
        preds = []
        pred_map = {}
        for k in range(n):
            size = rng.randint(0, m)
            classes = tuple(
                sorted(rng.sample(list(schema.classes), size), key=schema.class_index.get)
            )
            preds.append(REPrediction(f"i{k}", classes, abstained=not classes))
            pred_map[f"i{k}"] = classes
        report = evaluate(preds, gold, schema, include_negative=include_negative)
        gold_map = {f"i{k}": labels[k] for k in range(n)}
        ok &= (report.tp, report.fp, report.fn) == oracle(
            pred_map, gold_map, schema, include_negative
        )
        if not ok:
            break
    _report("C7 evaluation oracle equivalence", ok, "(100 randomized prediction sets)")


def test_c8_parser_table():
    """The partial-string-matching table behaves as documented."""
    cases = {
        "Entailment.": ParsedLabel.ENTAIL,
        "contradiction": ParsedLabel.CONTRADICT,
        "Neutral": ParsedLabel.NEUTRAL,
        "maybe": ParsedLabel.NONE,
    }
    results = {text: parse_nli_label(text) for text in cases}
    ok = results == cases
    _report("C8 parser table", ok, f"({results})")


def test_c9_adapt_determinism(tmp_path):
    """Two CLI adapt runs over identical inputs write byte-identical files."""
    schema = load_schema("biored")
    split = synthetic_split(schema, 50, seed=13)
    train = tmp_path / "train.jsonl"
    write_split(split, train)
    idx = tmp_path / "idx.json"
    assert cli_main(["build-index", "--schema", "biored", "--split", str(train), "--out", str(idx)]) == 0
    blobs = []
    for name in ("one.jsonl", "two.jsonl"):
        out = tmp_path / name
        code = cli_main([
            "adapt", "--schema", "biored", "--split", str(train),
            "--index", str(idx), "--out", str(out),
        ])
        assert code == 0
        blobs.append(out.read_bytes())
    ok = blobs[0] == blobs[1] and len(blobs[0]) > 0
    _report("C9 adapt determinism", ok, f"({len(blobs[0])} bytes per run)")
