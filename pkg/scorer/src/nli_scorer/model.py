"""A small transformer encoder over concatenated premise-hypothesis pairs.

Sized for CPU training on adapted corpora: word-level inputs, learned
positional embeddings, CLS pooling into a 3-way classification head.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import torch
from torch import nn

from .data import LABEL_ORDER


@dataclass
class ModelConfig:
    vocab_size: int
    dim: int = 64
    heads: int = 4
    layers: int = 2
    ffn: int = 128
    max_len: int = 96
    dropout: float = 0.1
    num_labels: int = len(LABEL_ORDER)

    def to_dict(self) -> dict:
        return asdict(self)


class PairClassifier(nn.Module):
    def __init__(self, config: ModelConfig):
        super().__init__()
        self.config = config
        self.token_embedding = nn.Embedding(config.vocab_size, config.dim)
        self.position_embedding = nn.Embedding(config.max_len, config.dim)
        layer = nn.TransformerEncoderLayer(
            d_model=config.dim,
            nhead=config.heads,
            dim_feedforward=config.ffn,
            dropout=config.dropout,
            batch_first=True,
            norm_first=True,
        )
        self.encoder = nn.TransformerEncoder(
            layer, num_layers=config.layers, enable_nested_tensor=False
        )
        self.head = nn.Linear(config.dim, config.num_labels)

    def forward(self, ids: torch.Tensor, pad_id: int) -> torch.Tensor:
        positions = torch.arange(ids.shape[1], device=ids.device)
        x = self.token_embedding(ids) + self.position_embedding(positions)
        x = self.encoder(x, src_key_padding_mask=ids.eq(pad_id))
        return self.head(x[:, 0])  # CLS position
