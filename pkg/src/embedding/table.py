from collections.abc import Iterable, Iterator, Mapping, Sequence

import numpy as np
import numpy.typing as npt
from errors import DimensionMismatchError, StoreFormatError

Vector = npt.NDArray[np.float64]


class EmbeddingTable:
    """Immutable word -> vector map of one fixed dimension, in double precision."""

    def __init__(self, words: Sequence[str], vectors: npt.ArrayLike) -> None:
        matrix = np.array(vectors, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] != len(words):
            msg = f"Expected {len(words)} vectors, got an array of shape {matrix.shape}."
            raise DimensionMismatchError(msg)
        if len(set(words)) != len(words):
            msg = "Embedding table words must be unique."
            raise StoreFormatError(msg)
        if not np.isfinite(matrix).all():
            msg = "Embedding table contains NaN or infinite components."
            raise StoreFormatError(msg)
        matrix.setflags(write=False)
        self._words = tuple(words)
        self._matrix = matrix
        self._index = {word: row for row, word in enumerate(self._words)}

    @classmethod
    def from_mapping(cls, vectors: Mapping[str, Iterable[float]]) -> "EmbeddingTable":
        words = list(vectors)
        return cls(words, [list(vectors[word]) for word in words])

    @property
    def dim(self) -> int:
        return int(self._matrix.shape[1])

    @property
    def vocab_size(self) -> int:
        return len(self._words)

    @property
    def words(self) -> tuple[str, ...]:
        return self._words

    @property
    def matrix(self) -> Vector:
        return self._matrix

    def __contains__(self, word: object) -> bool:
        return word in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self._words)

    def __getitem__(self, word: str) -> Vector:
        return self._matrix[self._index[word]]

    def get(self, word: str) -> Vector | None:
        row = self._index.get(word)
        return None if row is None else self._matrix[row]
