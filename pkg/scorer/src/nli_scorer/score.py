"""Batch scoring: one probability triple per input pair."""

from __future__ import annotations

from pathlib import Path

import torch

from .data import read_pairs, write_predictions
from .train import load_checkpoint


def score(
    ckpt_dir: str | Path,
    pairs_path: str | Path,
    out_path: str | Path,
    batch_size: int = 64,
) -> int:
    """Score every pair in input order; rows are renormalized in float64 so
    each written triple sums to 1 well within the consumer's tolerance."""
    model, vocab, meta = load_checkpoint(ckpt_dir)
    max_len = meta["model"]["max_len"]
    records = read_pairs(pairs_path)
    model.eval()
    rows: list[tuple[str, list[float]]] = []
    with torch.no_grad():
        for start in range(0, len(records), batch_size):
            batch = records[start : start + batch_size]
            ids = torch.tensor(
                [vocab.encode_pair(r.premise, r.hypothesis, max_len) for r in batch],
                dtype=torch.long,
            )
            probs = torch.softmax(model(ids, vocab.pad_id).double(), dim=-1)
            probs = probs / probs.sum(dim=-1, keepdim=True)
            for record, row in zip(batch, probs.tolist()):
                rows.append((record.pair_id, row))
    write_predictions(rows, out_path)
    return len(rows)
