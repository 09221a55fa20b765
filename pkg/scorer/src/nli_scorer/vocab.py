"""Whitespace word vocabulary with the usual special tokens."""

from __future__ import annotations

import json
from collections import Counter
from pathlib import Path

PAD, UNK, CLS, SEP = "<pad>", "<unk>", "<cls>", "<sep>"
_SPECIALS = (PAD, UNK, CLS, SEP)


class Vocab:
    def __init__(self, tokens: list[str]):
        self.itos = list(_SPECIALS) + [t for t in tokens if t not in _SPECIALS]
        self.stoi = {t: i for i, t in enumerate(self.itos)}

    def __len__(self) -> int:
        return len(self.itos)

    @staticmethod
    def tokenize(text: str) -> list[str]:
        return text.lower().split()

    @classmethod
    def build(cls, texts, max_size: int | None = None) -> "Vocab":
        counts = Counter()
        for text in texts:
            counts.update(cls.tokenize(text))
        ranked = [t for t, _ in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))]
        if max_size is not None:
            ranked = ranked[: max_size - len(_SPECIALS)]
        return cls(ranked)

    def encode_pair(self, premise: str, hypothesis: str, max_len: int) -> list[int]:
        """[CLS] premise [SEP] hypothesis [SEP], truncated then padded to max_len."""
        unk = self.stoi[UNK]
        ids = [self.stoi[CLS]]
        ids += [self.stoi.get(t, unk) for t in self.tokenize(premise)]
        ids.append(self.stoi[SEP])
        ids += [self.stoi.get(t, unk) for t in self.tokenize(hypothesis)]
        ids.append(self.stoi[SEP])
        ids = ids[:max_len]
        ids += [self.stoi[PAD]] * (max_len - len(ids))
        return ids

    def save(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.itos, f, ensure_ascii=False)

    @classmethod
    def load(cls, path: str | Path) -> "Vocab":
        with open(path, encoding="utf-8") as f:
            itos = json.load(f)
        vocab = cls.__new__(cls)
        vocab.itos = itos
        vocab.stoi = {t: i for i, t in enumerate(itos)}
        return vocab

    @property
    def pad_id(self) -> int:
        return self.stoi[PAD]
