"""renli: turn relation-extraction corpora into NLI premise-hypothesis corpora.

The pipeline: load canonical instances, mask entity surface forms into
types, verbalize each relation class into a hypothesis, drop hypotheses the
training data marks infeasible for the instance's entity-type pair, assign
entail/neutral/contradict targets from class exclusivity structure, and --
once a model has scored the pairs -- select the most confident entailed
hypothesis per instance, map back to RE labels, and report micro-F1.
"""

from .adapt import (
    AdaptConfig,
    AdaptedCorpus,
    adapt_instance,
    adapt_split,
    merge,
    read_pairs,
    write_pairs,
)
from .errors import RenliError, SchemaError, ValidationError
from .feasibility import (
    FeasibilityIndex,
    build_index,
    feasible_classes,
    load_index,
    save_index,
)
from .ingest import DatasetSplit, StatsReport, load_split, split_stats, write_split
from .metaclass import (
    ExclusivityMatrix,
    build_matrix,
    degrade_matrix,
    load_matrix_fixture,
    nli_target,
    verify_matrix,
)
from .model import (
    BUNDLED_SCHEMAS,
    DatasetSchema,
    EntityMention,
    GeneratedText,
    HypothesisTemplate,
    NLILabel,
    PredictionRecord,
    PremiseHypothesisPair,
    Probabilities,
    RelationInstance,
    load_schema,
    make_pair_id,
    split_pair_id,
)
from .select_eval import (
    EvalReport,
    ParsedLabel,
    REPrediction,
    SelectionResult,
    back_map,
    evaluate,
    group_records,
    parse_nli_label,
    read_predictions,
    select_all,
    select_group,
    write_predictions,
    write_re_predictions,
)
from .synth import oracle_predictions, synthetic_schema, synthetic_split
from .verbalize import build_premise, fill_hypothesis, mask_token

__version__ = "0.1.0"

__all__ = [
    "AdaptConfig",
    "AdaptedCorpus",
    "BUNDLED_SCHEMAS",
    "DatasetSchema",
    "DatasetSplit",
    "EntityMention",
    "EvalReport",
    "ExclusivityMatrix",
    "FeasibilityIndex",
    "GeneratedText",
    "HypothesisTemplate",
    "NLILabel",
    "ParsedLabel",
    "PredictionRecord",
    "PremiseHypothesisPair",
    "Probabilities",
    "REPrediction",
    "RelationInstance",
    "RenliError",
    "SchemaError",
    "SelectionResult",
    "StatsReport",
    "ValidationError",
    "adapt_instance",
    "adapt_split",
    "back_map",
    "build_index",
    "build_matrix",
    "build_premise",
    "degrade_matrix",
    "evaluate",
    "feasible_classes",
    "fill_hypothesis",
    "group_records",
    "load_index",
    "load_matrix_fixture",
    "load_schema",
    "load_split",
    "make_pair_id",
    "mask_token",
    "merge",
    "nli_target",
    "oracle_predictions",
    "parse_nli_label",
    "read_pairs",
    "read_predictions",
    "save_index",
    "select_all",
    "select_group",
    "split_pair_id",
    "split_stats",
    "synthetic_schema",
    "synthetic_split",
    "verify_matrix",
    "write_pairs",
    "write_predictions",
    "write_re_predictions",
    "write_split",
]
