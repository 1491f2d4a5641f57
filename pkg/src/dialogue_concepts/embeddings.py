"""Static word-vector table with token/phrase embedding and cosine similarity."""

from __future__ import annotations

import gzip
import io
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from dialogue_concepts.errors import IngestionError


@dataclass(frozen=True)
class Embedding:
    values: np.ndarray
    is_zero: bool = field(default=False)

    @property
    def dimension(self) -> int:
        return self.values.shape[0]


class VectorStore:
    """Immutable token -> vector map; all vectors share one dimension."""

    def __init__(self, dimension: int, vectors: dict[str, np.ndarray]):
        if dimension <= 0:
            raise ValueError("dimension must be positive")
        self.dimension = dimension
        self._vectors = vectors
        self._zero = Embedding(np.zeros(dimension), is_zero=True)

    def __len__(self) -> int:
        return len(self._vectors)

    def __contains__(self, token: str) -> bool:
        return token in self._vectors

    @property
    def zero(self) -> Embedding:
        return self._zero


def load_vectors(source: Iterable[str], expected_dimension: int) -> VectorStore:
    """Parse a "token v1 ... vD" per-line vector file."""
    vectors: dict[str, np.ndarray] = {}
    for lineno, line in enumerate(source, start=1):
        line = line.rstrip("\n")
        if not line:
            continue
        parts = line.split(" ")
        if len(parts) != expected_dimension + 1:
            raise IngestionError(
                f"line {lineno}: expected {expected_dimension} components, "
                f"got {len(parts) - 1}"
            )
        token = parts[0]
        if token in vectors:
            raise IngestionError(f"line {lineno}: duplicate token {token!r}")
        try:
            vectors[token] = np.array([float(p) for p in parts[1:]], dtype=np.float64)
        except ValueError:
            raise IngestionError(f"line {lineno}: non-numeric component") from None
    return VectorStore(expected_dimension, vectors)


def open_vectors(path: str, gzipped: bool | None = None) -> io.TextIOBase:
    if gzipped is None:
        gzipped = path.endswith(".gz")
    if gzipped:
        return io.TextIOWrapper(gzip.open(path, "rb"), encoding="utf-8")
    return open(path, encoding="utf-8")


def embed_token(store: VectorStore, token: str) -> Embedding:
    """Stored vector, or the all-zero embedding for out-of-vocabulary tokens."""
    vector = store._vectors.get(token)
    if vector is None:
        return store.zero
    return Embedding(vector)


def embed_phrase(store: VectorStore, phrase: str) -> Embedding:
    """Mean of the in-vocabulary token embeddings; zero if none are known."""
    known = [store._vectors[t] for t in phrase.split() if t in store._vectors]
    if not known:
        return store.zero
    return Embedding(np.mean(known, axis=0))


def cosine(a: Embedding, b: Embedding) -> float:
    """Cosine similarity; 0.0 when either vector has zero norm."""
    if a.dimension != b.dimension:
        raise ValueError(f"dimension mismatch: {a.dimension} vs {b.dimension}")
    norm_a = float(np.linalg.norm(a.values))
    norm_b = float(np.linalg.norm(b.values))
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    return float(np.dot(a.values, b.values) / (norm_a * norm_b))
