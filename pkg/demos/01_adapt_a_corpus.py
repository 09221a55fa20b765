"""Walk through the core adaptation: one instance becomes m NLI pairs.

Shows entity-type masking, template verbalization, and the targets that the
class-exclusivity matrix assigns for a gold-labeled instance.
"""

from renli import (
    AdaptConfig,
    EntityMention,
    RelationInstance,
    adapt_instance,
    build_matrix,
    load_schema,
)

schema = load_schema("biored")
print(f"schema: {schema.name}, {schema.num_classes} classes, masking={schema.mask_entities}")

# A document-style instance: the head entity is mentioned twice.
instance = RelationInstance(
    id="pmid-12345",
    text=(
        "Sorafenib reduced VEGFR2 phosphorylation in treated mice. "
        "Further assays confirmed that sorafenib suppresses the receptor."
    ),
    head=EntityMention("Sorafenib", "ChemicalEntity", ((0, 9), (83, 92))),
    tail=EntityMention("VEGFR2", "GeneOrGeneProduct", ((18, 24),)),
    gold_label="Negative Correlation",
    dataset="biored",
)

matrix = build_matrix(schema)
pairs = adapt_instance(
    instance, schema, matrix, config=AdaptConfig(use_filter=False)
)

print(f"\npremise (both head mentions masked):\n  {pairs[0].premise}\n")
print(f"{'hypothesis class':<22} {'target':<11} hypothesis")
for pair in pairs:
    print(f"{pair.hypothesis_class:<22} {str(pair.target):<11} {pair.hypothesis}")

# The gold class entails; its definitional opposite contradicts; the rest
# are neutral. Exactly one entailed pair per instance is what makes the
# adaptation invertible.
entailed = [p for p in pairs if str(p.target) == "entail"]
assert [p.hypothesis_class for p in entailed] == ["Negative Correlation"]
print("\nentailed hypothesis recovers the gold class:", entailed[0].hypothesis_class)
