"""Word vectors for phrase similarity.

Pretrained vectors are read from the common text format (``<count> <dim>``
header, then ``word v1 ... vdim``). Words missing from the table get a
deterministic subword vector: the normalized sum of pseudo-random basis
vectors, one per character n-gram of ``<word>``.
"""

from __future__ import annotations

import hashlib
import io
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import IO, Sequence

import numpy as np

from .corpus import AnnotationError, nfc, tokenize_phrase

log = logging.getLogger(__name__)

DEFAULT_DIM = 100
DEFAULT_SEED = 13
DEFAULT_NGRAMS = (3, 5)


@lru_cache(maxsize=200_000)
def _basis(ngram: str, seed: int, dim: int) -> np.ndarray:
    digest = hashlib.blake2b(ngram.encode("utf-8"), digest_size=8, key=seed.to_bytes(8, "little")).digest()
    rng = np.random.Generator(np.random.PCG64(int.from_bytes(digest, "little")))
    v = rng.standard_normal(dim)
    v.flags.writeable = False
    return v


def char_ngrams(word: str, min_n: int = 3, max_n: int = 5) -> list[str]:
    marked = f"<{word}>"
    return [marked[i : i + n] for n in range(min_n, max_n + 1) for i in range(len(marked) - n + 1)]


@dataclass
class VectorTable:
    dimension: int = DEFAULT_DIM
    vectors: dict[str, np.ndarray] = field(default_factory=dict)
    ngram_range: tuple[int, int] = DEFAULT_NGRAMS
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        for word, v in self.vectors.items():
            if v.shape != (self.dimension,):
                raise ValueError(f"vector for {word!r} has shape {v.shape}, expected ({self.dimension},)")

    def __contains__(self, word: str) -> bool:
        return word in self.vectors

    def __len__(self) -> int:
        return len(self.vectors)


def load_vectors(stream: bytes | str | IO, seed: int = DEFAULT_SEED, ngram_range: tuple[int, int] = DEFAULT_NGRAMS) -> VectorTable:
    if isinstance(stream, bytes):
        stream = stream.decode("utf-8")
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    header = stream.readline()
    if isinstance(header, bytes):
        header = header.decode("utf-8")
    try:
        count, dim = (int(x) for x in header.split())
    except ValueError:
        raise AnnotationError("header must be '<count> <dim>'", 1) from None
    vectors: dict[str, np.ndarray] = {}
    for lineno, line in enumerate(stream, start=2):
        if isinstance(line, bytes):
            line = line.decode("utf-8")
        parts = line.rstrip("\n").rstrip(" ").split(" ")
        if not parts or parts == [""]:
            continue
        word, comps = nfc(parts[0]), parts[1:]
        if len(comps) != dim:
            raise AnnotationError(f"expected {dim} components, got {len(comps)}", lineno)
        try:
            vectors[word] = np.array([float(c) for c in comps], dtype=np.float64)
        except ValueError:
            raise AnnotationError("non-numeric vector component", lineno) from None
    if len(vectors) != count:
        log.warning("vector header announces %d words, read %d", count, len(vectors))
    return VectorTable(dim, vectors, ngram_range, seed)


def fallback_vector(word: str, dim: int = DEFAULT_DIM, seed: int = DEFAULT_SEED, ngram_range: tuple[int, int] = DEFAULT_NGRAMS) -> np.ndarray:
    acc = np.zeros(dim)
    for g in char_ngrams(word, *ngram_range):
        acc += _basis(g, seed, dim)
    norm = np.linalg.norm(acc)
    return acc / norm if norm > 0 else acc


def embed_word(word: str, table: VectorTable) -> np.ndarray:
    v = table.vectors.get(word)
    if v is not None:
        return v
    return fallback_vector(word, table.dimension, table.seed, table.ngram_range)


def embed_phrase(phrase: str | Sequence[str], table: VectorTable) -> np.ndarray:
    words = tokenize_phrase(phrase) if isinstance(phrase, str) else list(phrase)
    if not words:
        raise ValueError("cannot embed an empty phrase")
    return np.sum([embed_word(w, table) for w in words], axis=0)


def similarity(u: np.ndarray, v: np.ndarray) -> float:
    u, v = np.asarray(u), np.asarray(v)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return float(np.dot(u, v))
