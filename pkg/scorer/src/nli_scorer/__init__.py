"""Reference scorer: a small NLI classifier over adapted premise-hypothesis pairs.

Communicates with the adaptation toolkit purely through files: it consumes
adapted-pair JSONL and produces prediction JSONL with probability triples in
the fixed (entail, neutral, contradict) order.
"""

from .data import LABEL_ORDER, DataError, PairRecord, ScorerError, read_pairs, write_predictions
from .model import ModelConfig, PairClassifier
from .score import score
from .train import TrainConfig, TrainResult, load_checkpoint, save_checkpoint, train
from .vocab import Vocab

__all__ = [
    "DataError",
    "LABEL_ORDER",
    "ModelConfig",
    "PairClassifier",
    "PairRecord",
    "ScorerError",
    "TrainConfig",
    "TrainResult",
    "Vocab",
    "load_checkpoint",
    "read_pairs",
    "save_checkpoint",
    "score",
    "train",
    "write_predictions",
]
