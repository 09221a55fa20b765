"""Exclusivity-matrix construction, target lookup, and degraded variants."""

import pytest

from renli import (
    BUNDLED_SCHEMAS,
    DatasetSchema,
    NLILabel,
    build_matrix,
    degrade_matrix,
    load_matrix_fixture,
    load_schema,
    nli_target,
    verify_matrix,
)
from renli.errors import SchemaError, UnknownClass
from renli.metaclass import ExclusivityMatrix


class TestBuildMatrix:
    def test_chemprot_cliques(self):
        schema = load_schema("chemprot")
        matrix = build_matrix(schema)
        assert nli_target(matrix, "Upregulator", "Downregulator") is NLILabel.CONTRADICT
        assert nli_target(matrix, "Agonist", "Antagonist") is NLILabel.CONTRADICT
        assert nli_target(matrix, "Upregulator", "Agonist") is NLILabel.NEUTRAL
        assert nli_target(matrix, "Substrate", "Substrate") is NLILabel.ENTAIL

    def test_semeval_all_neutral_off_diagonal(self):
        schema = load_schema("semeval")
        matrix = build_matrix(schema)
        for g in schema.classes:
            for h in schema.classes:
                expected = NLILabel.ENTAIL if g == h else NLILabel.NEUTRAL
                assert nli_target(matrix, g, h) is expected

    def test_binary_with_negative_contradicts_off_diagonal(self):
        schema = load_schema("bc5cdr")
        matrix = build_matrix(schema)
        assert nli_target(matrix, "Associated", "Not Associated") is NLILabel.CONTRADICT
        assert nli_target(matrix, "Not Associated", "Associated") is NLILabel.CONTRADICT
        assert nli_target(matrix, "Associated", "Associated") is NLILabel.ENTAIL

    def test_negative_class_row_and_column(self):
        schema = load_schema("retacred")
        matrix = build_matrix(schema)
        for cls in schema.classes:
            if cls == "no relation":
                continue
            assert nli_target(matrix, "no relation", cls) is NLILabel.CONTRADICT
            assert nli_target(matrix, cls, "no relation") is NLILabel.CONTRADICT


class TestNliTarget:
    def test_positive_vs_exclusive_positive(self):
        matrix = build_matrix(load_schema("biored"))
        assert (
            nli_target(matrix, "Positive Correlation", "Negative Correlation")
            is NLILabel.CONTRADICT
        )

    def test_positive_vs_unrelated_positive(self):
        matrix = build_matrix(load_schema("biored"))
        assert nli_target(matrix, "Positive Correlation", "Association") is NLILabel.NEUTRAL

    def test_diagonal_always_entails(self):
        for name in BUNDLED_SCHEMAS:
            matrix = build_matrix(load_schema(name))
            for cls in matrix.classes:
                assert nli_target(matrix, cls, cls) is NLILabel.ENTAIL

    def test_unknown_class(self):
        matrix = build_matrix(load_schema("gad"))
        with pytest.raises(UnknownClass):
            nli_target(matrix, "Associated", "Nope")


class TestFixtureFidelity:
    @pytest.mark.parametrize("name", BUNDLED_SCHEMAS)
    def test_rule_matrix_equals_fixture(self, name):
        assert verify_matrix(load_schema(name)) == []

    @pytest.mark.parametrize("name", BUNDLED_SCHEMAS)
    def test_each_row_has_exactly_one_entail(self, name):
        matrix = load_matrix_fixture(name)
        for row in matrix.cells:
            assert sum(1 for c in row if c is NLILabel.ENTAIL) == 1

    def test_retacred_familial_clique_cells(self):
        matrix = load_matrix_fixture("retacred")
        familial = [
            "per:children",
            "per:identity",
            "per:other family",
            "per:parents",
            "per:siblings",
            "per:spouse",
        ]
        for g in familial:
            for h in familial:
                expected = NLILabel.ENTAIL if g == h else NLILabel.CONTRADICT
                assert nli_target(matrix, g, h) is expected
        assert nli_target(matrix, "org:members", "org:member of") is NLILabel.CONTRADICT
        # familial exclusivity does not leak outside the clique
        assert nli_target(matrix, "per:children", "per:age") is NLILabel.NEUTRAL

    def test_verify_reports_mismatches(self, toy_schema):
        built = build_matrix(toy_schema)
        cells = [list(row) for row in built.cells]
        cells[1][3] = NLILabel.CONTRADICT
        cells[3][1] = NLILabel.CONTRADICT
        tampered = ExclusivityMatrix(
            classes=built.classes, cells=tuple(tuple(r) for r in cells)
        )
        problems = verify_matrix(toy_schema, fixture=tampered)
        assert len(problems) == 2


class TestMatrixInvariants:
    def test_diagonal_must_entail(self):
        with pytest.raises(SchemaError):
            ExclusivityMatrix(
                classes=("a", "b"),
                cells=(
                    (NLILabel.NEUTRAL, NLILabel.NEUTRAL),
                    (NLILabel.NEUTRAL, NLILabel.ENTAIL),
                ),
            )

    def test_contradiction_symmetry_enforced(self):
        with pytest.raises(SchemaError):
            ExclusivityMatrix(
                classes=("a", "b"),
                cells=(
                    (NLILabel.ENTAIL, NLILabel.CONTRADICT),
                    (NLILabel.NEUTRAL, NLILabel.ENTAIL),
                ),
            )

    def test_fixture_roundtrip(self):
        matrix = load_matrix_fixture("chemprot")
        assert ExclusivityMatrix.from_dict(matrix.to_dict()) == matrix


def strip_cliques(schema: DatasetSchema) -> DatasetSchema:
    return DatasetSchema(
        name=schema.name,
        classes=schema.classes,
        negative_class=schema.negative_class,
        templates=schema.templates,
        exclusivity_cliques=(),
        mask_entities=schema.mask_entities,
    )


class TestDegradeMatrix:
    def test_chemprot_clique_cell_becomes_neutral(self):
        schema = load_schema("chemprot")
        degraded = degrade_matrix(build_matrix(schema), schema)
        assert nli_target(degraded, "Upregulator", "Downregulator") is NLILabel.NEUTRAL
        assert nli_target(degraded, "Upregulator", "Upregulator") is NLILabel.ENTAIL

    def test_semeval_is_fixed_point(self):
        schema = load_schema("semeval")
        matrix = build_matrix(schema)
        assert degrade_matrix(matrix, schema) == matrix

    @pytest.mark.parametrize("name", BUNDLED_SCHEMAS)
    def test_equals_rule_rebuild_without_cliques(self, name):
        # independent derivation: build from the same schema with cliques removed
        schema = load_schema(name)
        degraded = degrade_matrix(build_matrix(schema), schema)
        assert degraded == build_matrix(strip_cliques(schema))

    def test_retacred_keeps_negative_contradictions(self):
        schema = load_schema("retacred")
        degraded = degrade_matrix(build_matrix(schema), schema)
        assert nli_target(degraded, "per:children", "per:spouse") is NLILabel.NEUTRAL
        assert nli_target(degraded, "no relation", "per:spouse") is NLILabel.CONTRADICT
        assert nli_target(degraded, "per:spouse", "no relation") is NLILabel.CONTRADICT

    @pytest.mark.parametrize("name", BUNDLED_SCHEMAS)
    def test_idempotent(self, name):
        schema = load_schema(name)
        once = degrade_matrix(build_matrix(schema), schema)
        assert degrade_matrix(once, schema) == once
