"""Exception taxonomy for the adaptation pipeline.

Everything raised on bad data derives from ValidationError so callers (and
the CLI) can distinguish data problems from I/O and usage problems.
"""

from __future__ import annotations


class RenliError(Exception):
    """Base class for all library errors."""


class ValidationError(RenliError):
    """Input data or configuration violates a contract."""


class SchemaError(ValidationError):
    """A dataset schema pack violates its own invariants."""


class MalformedLine(ValidationError):
    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class SpanOutOfBounds(ValidationError):
    def __init__(self, instance_id: str, detail: str = ""):
        super().__init__(f"instance {instance_id!r}: span out of bounds {detail}".rstrip())
        self.instance_id = instance_id


class OverlappingSpans(ValidationError):
    def __init__(self, instance_id: str, detail: str = ""):
        super().__init__(f"instance {instance_id!r}: overlapping spans {detail}".rstrip())
        self.instance_id = instance_id


class UnknownLabel(ValidationError):
    def __init__(self, instance_id: str, label: str):
        super().__init__(f"instance {instance_id!r}: label {label!r} not in schema")
        self.instance_id = instance_id
        self.label = label


class DuplicateId(ValidationError):
    def __init__(self, instance_id: str):
        super().__init__(f"duplicate instance id {instance_id!r}")
        self.instance_id = instance_id


class UnlabeledInstance(ValidationError):
    def __init__(self, instance_id: str):
        super().__init__(f"instance {instance_id!r} has no gold label")
        self.instance_id = instance_id


class DuplicatePairId(ValidationError):
    def __init__(self, dataset: str, pair_id: str):
        super().__init__(f"duplicate pair id {pair_id!r} in dataset {dataset!r}")
        self.dataset = dataset
        self.pair_id = pair_id


class UnknownClass(ValidationError):
    def __init__(self, class_id: str):
        super().__init__(f"class {class_id!r} not in schema")
        self.class_id = class_id


class MixedInstanceIds(ValidationError):
    def __init__(self, ids):
        super().__init__(f"prediction group mixes instance ids: {sorted(ids)}")
        self.ids = ids


class EmptyGroup(ValidationError):
    def __init__(self):
        super().__init__("prediction group is empty")


class UnknownInstanceId(ValidationError):
    def __init__(self, instance_id: str):
        super().__init__(f"prediction for unknown instance id {instance_id!r}")
        self.instance_id = instance_id
