"""Print the NLI-target matrices for the bundled schema packs.

Cell coding: E = the hypothesis restates the gold class (entail),
C = the classes are definitionally incompatible (contradict),
. = compatible-but-different (neutral). The no-meta-class variant keeps
only contradictions that involve the negative class.
"""

from renli import build_matrix, degrade_matrix, load_schema

GLYPH = {"entail": "E", "contradict": "C", "neutral": "."}


def show(matrix, title, width=14):
    print(f"\n{title}")
    for cls, row in zip(matrix.classes, matrix.cells):
        cells = " ".join(GLYPH[c.value] for c in row)
        print(f"  {cls[:width]:<{width}} {cells}")


for name in ("bc5cdr", "biored", "chemprot", "ddi13", "semeval"):
    schema = load_schema(name)
    matrix = build_matrix(schema)
    show(matrix, f"{name} (m={schema.num_classes}, negative={schema.negative_class})")

schema = load_schema("chemprot")
show(
    degrade_matrix(build_matrix(schema), schema),
    "chemprot without meta-class analysis (clique contradictions neutralized)",
)

# retacred is 40x40; just summarize its structure
schema = load_schema("retacred")
matrix = build_matrix(schema)
contradictions = sum(
    1
    for i, row in enumerate(matrix.cells)
    for j, cell in enumerate(row)
    if cell.value == "contradict" and i < j
)
print(
    f"\nretacred: m=40, negative={schema.negative_class!r}, "
    f"{contradictions} contradicting class pairs "
    f"(39 negative/positive + familial clique + member-of/members)"
)
