"""Shared fixtures: a small hand-built schema and instances used across suites."""

import pytest

from renli import (
    DatasetSchema,
    EntityMention,
    HypothesisTemplate,
    RelationInstance,
)


@pytest.fixture
def toy_schema():
    """Four classes with a negative class and one exclusive pair, masked mode."""
    return DatasetSchema(
        name="toy",
        classes=("none", "activates", "inhibits", "binds"),
        negative_class="none",
        templates={
            "none": HypothesisTemplate("{subj} has no relation with {obj}."),
            "activates": HypothesisTemplate("{subj} activates {obj}."),
            "inhibits": HypothesisTemplate("{subj} inhibits {obj}."),
            "binds": HypothesisTemplate("{subj} binds to {obj}."),
        },
        exclusivity_cliques=(frozenset({"activates", "inhibits"}),),
        mask_entities=True,
    )


@pytest.fixture
def plain_schema():
    """Two positive classes, no negative, no cliques, unmasked mode."""
    return DatasetSchema(
        name="plain",
        classes=("spouse", "sibling"),
        negative_class=None,
        templates={
            "spouse": HypothesisTemplate("{subj}'s spouse is {obj}."),
            "sibling": HypothesisTemplate("{subj}'s sibling is {obj}."),
        },
        exclusivity_cliques=(),
        mask_entities=False,
    )


def make_instance(
    iid="i0",
    text="BRCA1 causes cancer",
    head=("BRCA1", "GeneOrGeneProduct", ((0, 5),)),
    tail=("cancer", "DiseaseOrPhenotypicFeature", ((13, 19),)),
    gold="activates",
    dataset="toy",
):
    return RelationInstance(
        id=iid,
        text=text,
        head=EntityMention(*head),
        tail=EntityMention(*tail),
        gold_label=gold,
        dataset=dataset,
    )


@pytest.fixture
def brca_instance():
    return make_instance()
