"""Text vector files: optional `vocab_size dim` header, then `word v1 ... vd` per line."""
import logging
import math
from pathlib import Path

import numpy as np
from embedding.table import EmbeddingTable
from errors import StoreFormatError, StoreMissingError

logger = logging.getLogger(__name__)


def _is_header(fields: list[str]) -> bool:
    return len(fields) == 2 and all(field.isdigit() for field in fields)


def load_table(path: Path) -> EmbeddingTable:
    if not path.is_file():
        msg = f"Vector file {path} does not exist."
        raise StoreMissingError(msg)

    vectors: dict[str, list[float]] = {}
    dim: int | None = None
    duplicates = 0
    with path.open(encoding="utf-8") as vector_file:
        for number, line in enumerate(vector_file, start=1):
            fields = line.rstrip("\n").split()
            if not fields:
                continue
            if number == 1 and _is_header(fields):
                dim = int(fields[1])
                continue
            word, components = fields[0], fields[1:]
            if dim is None:
                dim = len(components)
            if len(components) != dim or dim == 0:
                msg = f"{path}:{number} has {len(components)} components, expected {dim}."
                raise StoreFormatError(msg)
            try:
                values = [float(component) for component in components]
            except ValueError:
                msg = f"{path}:{number} has a component that is not a number."
                raise StoreFormatError(msg) from None
            if not all(math.isfinite(value) for value in values):
                msg = f"{path}:{number} has a NaN or infinite component."
                raise StoreFormatError(msg)
            if word in vectors:
                duplicates += 1
            vectors[word] = values

    if not vectors:
        msg = f"Vector file {path} holds no vectors."
        raise StoreFormatError(msg)
    if duplicates:
        logger.warning(
            "%s: %d duplicate words, the last vector of each was kept.",
            path,
            duplicates,
        )
    return EmbeddingTable(list(vectors), np.array(list(vectors.values()), dtype=np.float64))


def write_table(path: Path, table: EmbeddingTable) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as vector_file:
        vector_file.write(f"{table.vocab_size} {table.dim}\n")
        for word in table:
            components = " ".join(repr(float(value)) for value in table[word])
            vector_file.write(f"{word} {components}\n")
