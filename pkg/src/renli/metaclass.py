"""Exclusivity matrices mapping (gold class, hypothesis class) to NLI targets.

A matrix cell answers: given that the gold relation is g, what should the
model say about the hypothesis verbalizing class h? The diagonal entails;
definitionally mutually exclusive classes contradict; a negative class
contradicts every positive class in both directions; everything else is
neutral.

Matrices exist in two independent representations, rule-built from the
schema and hand-encoded fixture files, and the test suite cross-validates
them cell for cell.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import SchemaError, UnknownClass
from .model import DatasetSchema, NLILabel

# fixture cell coding
_INT_TO_LABEL = {0: NLILabel.CONTRADICT, 1: NLILabel.NEUTRAL, 2: NLILabel.ENTAIL}
_LABEL_TO_INT = {v: k for k, v in _INT_TO_LABEL.items()}


@dataclass(frozen=True)
class ExclusivityMatrix:
    """m x m grid of NLI targets indexed by (gold class, hypothesis class)."""

    classes: tuple[str, ...]
    cells: tuple[tuple[NLILabel, ...], ...]

    def __post_init__(self):
        m = len(self.classes)
        if len(self.cells) != m or any(len(row) != m for row in self.cells):
            raise SchemaError("matrix is not square over its class list")
        for i in range(m):
            if self.cells[i][i] is not NLILabel.ENTAIL:
                raise SchemaError(f"diagonal cell for {self.classes[i]!r} is not entail")
            for j in range(m):
                a, b = self.cells[i][j], self.cells[j][i]
                if (a is NLILabel.CONTRADICT) != (b is NLILabel.CONTRADICT):
                    raise SchemaError(
                        f"asymmetric contradiction between {self.classes[i]!r} "
                        f"and {self.classes[j]!r}"
                    )

    def to_dict(self) -> dict:
        return {
            "classes": list(self.classes),
            "cells": [[_LABEL_TO_INT[c] for c in row] for row in self.cells],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ExclusivityMatrix":
        return cls(
            classes=tuple(d["classes"]),
            cells=tuple(
                tuple(_INT_TO_LABEL[int(c)] for c in row) for row in d["cells"]
            ),
        )


def build_matrix(schema: DatasetSchema) -> ExclusivityMatrix:
    """Construct the NLI-target matrix from schema rules alone."""
    m = schema.num_classes
    idx = schema.class_index
    grid = [[NLILabel.NEUTRAL] * m for _ in range(m)]
    for i in range(m):
        grid[i][i] = NLILabel.ENTAIL
    if schema.negative_class is not None:
        n = idx[schema.negative_class]
        for i in range(m):
            if i != n:
                grid[n][i] = NLILabel.CONTRADICT
                grid[i][n] = NLILabel.CONTRADICT
    for clique in schema.exclusivity_cliques:
        members = sorted(idx[c] for c in clique)
        for i in members:
            for j in members:
                if i != j:
                    grid[i][j] = NLILabel.CONTRADICT
    return ExclusivityMatrix(
        classes=schema.classes, cells=tuple(tuple(row) for row in grid)
    )


def nli_target(matrix: ExclusivityMatrix, gold: str, hypothesis: str) -> NLILabel:
    try:
        g = matrix.classes.index(gold)
    except ValueError:
        raise UnknownClass(gold) from None
    try:
        h = matrix.classes.index(hypothesis)
    except ValueError:
        raise UnknownClass(hypothesis) from None
    return matrix.cells[g][h]


def degrade_matrix(
    matrix: ExclusivityMatrix, schema: DatasetSchema
) -> ExclusivityMatrix:
    """Drop clique-derived contradictions, keeping only negative/positive ones.

    This is the no-meta-class variant: every contradiction not involving the
    negative class becomes neutral. Idempotent.
    """
    neg = schema.negative_class
    rows = []
    for i, row in enumerate(matrix.cells):
        new_row = []
        for j, cell in enumerate(row):
            if (
                cell is NLILabel.CONTRADICT
                and matrix.classes[i] != neg
                and matrix.classes[j] != neg
            ):
                cell = NLILabel.NEUTRAL
            new_row.append(cell)
        rows.append(tuple(new_row))
    return ExclusivityMatrix(classes=matrix.classes, cells=tuple(rows))


def load_matrix_fixture(name_or_path: str | Path) -> ExclusivityMatrix:
    """Load a hand-encoded matrix fixture by bundled name or file path."""
    path = Path(name_or_path)
    if path.suffix == ".json" or path.exists():
        data = json.loads(path.read_text(encoding="utf-8"))
    else:
        ref = resources.files(__package__) / "matrices" / f"{name_or_path}.json"
        if not ref.is_file():
            raise SchemaError(f"no bundled matrix fixture {name_or_path!r}")
        data = json.loads(ref.read_text(encoding="utf-8"))
    return ExclusivityMatrix.from_dict(data)


def verify_matrix(schema: DatasetSchema, fixture: ExclusivityMatrix | None = None) -> list[str]:
    """Diff the rule-built matrix against its fixture; empty list means identical."""
    if fixture is None:
        fixture = load_matrix_fixture(schema.name)
    built = build_matrix(schema)
    problems: list[str] = []
    if fixture.classes != built.classes:
        problems.append(
            f"class lists differ: fixture={list(fixture.classes)} built={list(built.classes)}"
        )
        return problems
    for i, cls_g in enumerate(built.classes):
        for j, cls_h in enumerate(built.classes):
            if built.cells[i][j] is not fixture.cells[i][j]:
                problems.append(
                    f"cell ({cls_g!r}, {cls_h!r}): rule={built.cells[i][j]} "
                    f"fixture={fixture.cells[i][j]}"
                )
    return problems
