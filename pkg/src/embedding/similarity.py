from collections.abc import Iterable
from typing import NamedTuple

import numpy as np
from errors import DegenerateVectorError, DimensionMismatchError, NoRepresentationError

from embedding.table import EmbeddingTable, Vector


class MeanVector(NamedTuple):
    vector: Vector
    used: int
    skipped: int


def cosine(a: Vector, b: Vector) -> float:
    if a.shape != b.shape:
        msg = f"Cannot compare vectors of shapes {a.shape} and {b.shape}."
        raise DimensionMismatchError(msg)
    norm_a = float(np.linalg.norm(a))
    norm_b = float(np.linalg.norm(b))
    if norm_a == 0.0 or norm_b == 0.0:
        msg = "Cosine similarity is undefined for a zero vector."
        raise DegenerateVectorError(msg)
    return float(np.dot(a, b)) / (norm_a * norm_b)


def mean_vector(tokens: Iterable[str], table: EmbeddingTable) -> MeanVector:
    """Mean of the in-vocabulary token vectors; out-of-vocabulary tokens are skipped."""
    total = np.zeros(table.dim, dtype=np.float64)
    used = skipped = 0
    for token in tokens:
        if (vector := table.get(token)) is None:
            skipped += 1
            continue
        total += vector
        used += 1
    if used == 0:
        msg = f"None of the {skipped} tokens has a vector."
        raise NoRepresentationError(msg)
    return MeanVector(vector=total / used, used=used, skipped=skipped)


def attribute_similarity(
    attribute: Iterable[str],
    review_tokens: Iterable[str],
    table: EmbeddingTable,
) -> float:
    """C_s: cosine between the attribute's and the review's mean vectors."""
    return cosine(mean_vector(attribute, table).vector, mean_vector(review_tokens, table).vector)


def most_similar(word: str, table: EmbeddingTable, k: int = 10) -> list[tuple[str, float]]:
    """The `k` words closest to `word` by cosine, excluding the word itself."""
    if word not in table:
        msg = f"{word!r} has no vector."
        raise NoRepresentationError(msg)
    norms = np.linalg.norm(table.matrix, axis=1)
    query = table[word]
    with np.errstate(divide="ignore", invalid="ignore"):
        similarities = table.matrix @ query / (norms * np.linalg.norm(query))
    neighbours = [
        (other, float(similarity))
        for other, similarity in zip(table.words, similarities, strict=True)
        if other != word and np.isfinite(similarity)
    ]
    neighbours.sort(key=lambda pair: (-pair[1], pair[0]))
    return neighbours[:k]
