"""Cross-entropy training over adapted pairs, with per-epoch dev loss."""

from __future__ import annotations

import json
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path

import torch
from torch import nn

from .data import LABEL_ORDER, LABEL_TO_ID, DataError, read_pairs
from .model import ModelConfig, PairClassifier
from .vocab import Vocab

CONFIG_FILE = "config.json"
VOCAB_FILE = "vocab.json"
WEIGHTS_FILE = "model.pt"


@dataclass
class TrainConfig:
    epochs: int = 20
    batch_size: int = 32
    lr: float = 1e-3
    seed: int = 0
    dim: int = 64
    heads: int = 4
    layers: int = 2
    ffn: int = 128
    max_len: int = 96
    dropout: float = 0.1

    @classmethod
    def from_dict(cls, d: dict) -> "TrainConfig":
        unknown = set(d) - set(cls.__dataclass_fields__)
        if unknown:
            raise DataError(f"unknown config keys: {sorted(unknown)}")
        return cls(**d)


@dataclass
class TrainResult:
    step_losses: list[float] = field(default_factory=list)
    dev_losses: list[float] = field(default_factory=list)
    checkpoint: str = ""


def _encode_batch(records, vocab, max_len):
    ids = torch.tensor(
        [vocab.encode_pair(r.premise, r.hypothesis, max_len) for r in records],
        dtype=torch.long,
    )
    targets = torch.tensor([LABEL_TO_ID[r.target] for r in records], dtype=torch.long)
    return ids, targets


def _dev_loss(model, records, vocab, config, loss_fn) -> float:
    model.eval()
    total, count = 0.0, 0
    with torch.no_grad():
        for start in range(0, len(records), config.batch_size):
            batch = records[start : start + config.batch_size]
            ids, targets = _encode_batch(batch, vocab, config.max_len)
            logits = model(ids, vocab.pad_id)
            total += loss_fn(logits, targets).item() * len(batch)
            count += len(batch)
    model.train()
    return total / count if count else 0.0


def load_checkpoint(ckpt_dir: str | Path):
    ckpt_dir = Path(ckpt_dir)
    with open(ckpt_dir / CONFIG_FILE, encoding="utf-8") as f:
        meta = json.load(f)
    if tuple(meta["label_order"]) != LABEL_ORDER:
        raise DataError(
            f"checkpoint label order {meta['label_order']} != expected {list(LABEL_ORDER)}"
        )
    vocab = Vocab.load(ckpt_dir / VOCAB_FILE)
    model = PairClassifier(ModelConfig(**meta["model"]))
    model.load_state_dict(torch.load(ckpt_dir / WEIGHTS_FILE, map_location="cpu"))
    return model, vocab, meta


def save_checkpoint(ckpt_dir: str | Path, model: PairClassifier, vocab: Vocab) -> None:
    ckpt_dir = Path(ckpt_dir)
    ckpt_dir.mkdir(parents=True, exist_ok=True)
    meta = {"label_order": list(LABEL_ORDER), "model": model.config.to_dict()}
    with open(ckpt_dir / CONFIG_FILE, "w", encoding="utf-8") as f:
        json.dump(meta, f, indent=1)
    vocab.save(ckpt_dir / VOCAB_FILE)
    torch.save(model.state_dict(), ckpt_dir / WEIGHTS_FILE)


def train(
    train_path: str | Path,
    dev_path: str | Path | None,
    out_dir: str | Path,
    config: TrainConfig = TrainConfig(),
    base: str | Path | None = None,
    log=lambda msg: print(msg, file=sys.stderr),
) -> TrainResult:
    """Fit the classifier on a labeled pair file and save a checkpoint.

    Every training pair must carry a target. With `base`, weights and
    vocabulary come from an existing checkpoint and training continues from
    there; otherwise a fresh model is built over the training vocabulary.
    """
    train_records = read_pairs(train_path, require_targets=True)
    if not train_records:
        raise DataError(f"{train_path}: no training pairs")
    dev_records = read_pairs(dev_path, require_targets=True) if dev_path else []

    torch.manual_seed(config.seed)
    rng = random.Random(config.seed)

    if base is not None:
        model, vocab, _ = load_checkpoint(base)
    else:
        vocab = Vocab.build(
            [r.premise for r in train_records] + [r.hypothesis for r in train_records]
        )
        model = PairClassifier(
            ModelConfig(
                vocab_size=len(vocab),
                dim=config.dim,
                heads=config.heads,
                layers=config.layers,
                ffn=config.ffn,
                max_len=config.max_len,
                dropout=config.dropout,
            )
        )
    assert model.head.out_features == len(LABEL_ORDER)

    loss_fn = nn.CrossEntropyLoss()
    optimizer = torch.optim.Adam(model.parameters(), lr=config.lr)
    result = TrainResult()
    model.train()
    order = list(range(len(train_records)))
    for epoch in range(config.epochs):
        rng.shuffle(order)
        for start in range(0, len(order), config.batch_size):
            batch = [train_records[i] for i in order[start : start + config.batch_size]]
            ids, targets = _encode_batch(batch, vocab, config.max_len)
            optimizer.zero_grad()
            loss = loss_fn(model(ids, vocab.pad_id), targets)
            loss.backward()
            optimizer.step()
            result.step_losses.append(loss.item())
        if dev_records:
            dev = _dev_loss(model, dev_records, vocab, config, loss_fn)
            result.dev_losses.append(dev)
            log(f"epoch {epoch + 1}/{config.epochs}: dev loss {dev:.4f}")
        else:
            log(f"epoch {epoch + 1}/{config.epochs}: train loss {result.step_losses[-1]:.4f}")

    save_checkpoint(out_dir, model, vocab)
    result.checkpoint = str(out_dir)
    return result
