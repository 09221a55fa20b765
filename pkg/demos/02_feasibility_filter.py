"""Show the feasible-hypothesis filter trimming the pair explosion.

The index records which (head type, tail type) pairs each class was seen
with during training; hypotheses for classes never seen with an instance's
type pair are dropped before any model sees them.
"""

from renli import (
    AdaptConfig,
    adapt_split,
    build_index,
    build_matrix,
    feasible_classes,
    load_schema,
    synthetic_split,
)

schema = load_schema("biored")
train = synthetic_split(schema, 400, seed=20)
index = build_index(train, schema)

print(f"type-pair coverage per class ({schema.name}):")
for cls in schema.classes:
    pairs = sorted(index.pairs_by_class[cls])
    print(f"  {cls:<22} {len(pairs):>2} pairs  {pairs[:3]}{' ...' if len(pairs) > 3 else ''}")

probe = ("gene", "disease")
print(f"\nfeasible classes for head={probe[0]!r}, tail={probe[1]!r}:")
print(" ", feasible_classes(index, *probe) or "(none -> automatic abstention)")

matrix = build_matrix(schema)
with_filter = adapt_split(train, schema, matrix, index)
without = adapt_split(train, schema, matrix, config=AdaptConfig(use_filter=False))

n, m = len(train.instances), schema.num_classes
print(f"\npair counts over {n} instances, m={m}:")
print(f"  without filter: {len(without.pairs):>5}  (= n*m = {n * m})")
print(f"  with filter:    {len(with_filter.pairs):>5}  "
      f"({1 - len(with_filter.pairs) / len(without.pairs):.0%} fewer)")

# training-data recall: the filter never drops a training instance's own gold class
dropped_gold = sum(
    1
    for inst in train.instances
    if inst.gold_label
    not in feasible_classes(index, inst.head.entity_type, inst.tail.entity_type)
)
print(f"  gold classes dropped on the index's own training data: {dropped_gold}")
