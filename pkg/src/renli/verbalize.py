"""Premise construction and hypothesis verbalization.

Biomedical packs mask entity surface forms with their types, e.g.
"BRCA1 causes cancer" becomes "@GeneOrGeneProduct$ causes
@DiseaseOrPhenotypicFeature$". General-domain packs leave text untouched.
The same @type$ rendering is used inside hypotheses so premise and
hypothesis mention entities identically.
"""

from __future__ import annotations

import re

from .errors import OverlappingSpans
from .model import DatasetSchema, HypothesisTemplate, RelationInstance

MARKER_START = "@"
MARKER_END = "$"


def mask_token(entity_type: str) -> str:
    return f"{MARKER_START}{entity_type}{MARKER_END}"


def build_premise(instance: RelationInstance, schema: DatasetSchema) -> str:
    """Mask every head and tail mention span with its entity-type marker.

    Takes a raw instance only: offsets refer to instance.text, so the
    replacement must not be applied to already-masked output. Replacements
    run right-to-left so earlier offsets stay valid.
    """
    if not schema.mask_entities:
        return instance.text
    replacements = [
        (span, mask_token(instance.head.entity_type)) for span in instance.head.spans
    ] + [
        (span, mask_token(instance.tail.entity_type)) for span in instance.tail.spans
    ]
    replacements.sort(key=lambda r: r[0])
    for ((_, e1), _), ((s2, _), _) in zip(replacements, replacements[1:]):
        if s2 < e1:  # unreachable for instances that passed validation
            raise OverlappingSpans(instance.id)
    text = instance.text
    for (start, end), marker in reversed(replacements):
        text = text[:start] + marker + text[end:]
    return text


_PLACEHOLDER_RE = re.compile(r"\{subj\}|\{obj\}")


def fill_hypothesis(
    template: HypothesisTemplate,
    instance: RelationInstance,
    schema: DatasetSchema,
) -> str:
    """Substitute {subj}/{obj} with the same entity rendering the premise uses."""
    if schema.mask_entities:
        subj = mask_token(instance.head.entity_type)
        obj = mask_token(instance.tail.entity_type)
    else:
        subj = instance.head.surface
        obj = instance.tail.surface
    # single pass so substituted text can never be re-matched
    return _PLACEHOLDER_RE.sub(
        lambda m: subj if m.group() == "{subj}" else obj,
        template.template_text,
    )
