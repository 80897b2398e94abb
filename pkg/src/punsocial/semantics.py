"""Word-embedding store and the semantic fitness scores."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .textdata import DataFormatError


class EmbeddingStore:
    """Immutable word -> vector map; all vectors share one dimension."""

    def __init__(self, dimension: int, vectors: dict[str, np.ndarray]):
        if dimension <= 0:
            raise ValueError("dimension must be positive")
        self.dimension = dimension
        self._vectors = {}
        self._norms = {}
        for word, vec in vectors.items():
            arr = np.asarray(vec, dtype=np.float64)
            if arr.shape != (dimension,):
                raise ValueError(f"vector for {word!r} has shape {arr.shape}, expected ({dimension},)")
            self._vectors[word.lower()] = arr
            self._norms[word.lower()] = float(np.linalg.norm(arr))

    def __contains__(self, word: str) -> bool:
        return word.lower() in self._vectors

    def __len__(self) -> int:
        return len(self._vectors)

    def get(self, word: str) -> np.ndarray | None:
        return self._vectors.get(word.lower())

    def norm(self, word: str) -> float:
        return self._norms.get(word.lower(), 0.0)


def load_embeddings(path: str | Path, expected_dim: int) -> EmbeddingStore:
    """Parse a text embedding file: `word v1 v2 ... vD` per line.

    Lines whose value count differs from ``expected_dim`` or that contain
    unparseable numbers are reported with their line number. Duplicate words
    keep the first occurrence.
    """
    vectors: dict[str, np.ndarray] = {}
    for line_no, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        word = parts[0].lower()
        values = parts[1:]
        if len(values) != expected_dim:
            raise DataFormatError(path, line_no, f"expected {expected_dim} values, found {len(values)}")
        try:
            vec = np.array([float(v) for v in values], dtype=np.float64)
        except ValueError:
            raise DataFormatError(path, line_no, "unparseable embedding value") from None
        if word not in vectors:
            vectors[word] = vec
    return EmbeddingStore(dimension=expected_dim, vectors=vectors)


def similarity(a: str, b: str, store: EmbeddingStore) -> float:
    """Cosine similarity; 0 when either word is missing or zero-norm."""
    va, vb = store.get(a), store.get(b)
    if va is None or vb is None:
        return 0.0
    norm_a, norm_b = store.norm(a), store.norm(b)
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    return float(np.dot(va, vb) / (norm_a * norm_b))


def food_similarity(title_words: Sequence[str], anchor: str, store: EmbeddingStore) -> float:
    """Maximum similarity of any title word to the anchor word."""
    if not title_words:
        raise ValueError("title must be nonempty")
    return max(similarity(word, anchor, store) for word in title_words)


def surprise_similarity(
    substitutions: Iterable[tuple[str, str]], store: EmbeddingStore
) -> float:
    """Mean similarity of replaced words to their originals; 0 when empty.

    Lower means more surprising, so this dimension is minimized downstream.
    """
    values = [similarity(orig, new, store) for orig, new in substitutions]
    if not values:
        return 0.0
    return sum(values) / len(values)
