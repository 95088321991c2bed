"""Annotation CSVs: helpfulness marks, gold orderings, and the sheet handed to annotators."""
import csv
from collections.abc import Iterable
from pathlib import Path

from errors import StoreFormatError, StoreMissingError
from pydantic import ValidationError
from schemas.evaluation import Annotation, AnnotationSet, GoldOrdering, PoolEntry

ANNOTATION_COLUMNS = ["attribute", "annotator", "review_id", "helpful"]
GOLD_COLUMNS = ["attribute", "annotator", "rank", "review_id"]
POOL_COLUMNS = ["category", "attribute", "review_id", "methods", "text"]


def _read_rows(path: Path, columns: list[str]) -> list[tuple[int, dict[str, str]]]:
    if not path.is_file():
        msg = f"Annotation file {path} does not exist."
        raise StoreMissingError(msg)
    with path.open(encoding="utf-8", newline="") as csv_file:
        reader = csv.DictReader(csv_file)
        if missing := set(columns) - set(reader.fieldnames or []):
            msg = f"{path} lacks the columns {', '.join(sorted(missing))}."
            raise StoreFormatError(msg)
        return [(number, row) for number, row in enumerate(reader, start=2)]


def read_marks(path: Path) -> list[Annotation]:
    marks = []
    for number, row in _read_rows(path, ANNOTATION_COLUMNS):
        if (helpful := row["helpful"].strip()) not in {"0", "1"}:
            msg = f"{path}:{number} has helpful={helpful!r}, expected 0 or 1."
            raise StoreFormatError(msg)
        marks.append(
            Annotation(
                attribute=row["attribute"].strip(),
                annotator=row["annotator"].strip(),
                review_id=row["review_id"].strip(),
                helpful=helpful == "1",
            ),
        )
    return marks


def read_orderings(path: Path) -> list[GoldOrdering]:
    ranked: dict[tuple[str, str], dict[int, str]] = {}
    for number, row in _read_rows(path, GOLD_COLUMNS):
        key = (row["attribute"].strip(), row["annotator"].strip())
        try:
            rank = int(row["rank"])
        except ValueError:
            msg = f"{path}:{number} has rank {row['rank']!r}, expected an integer."
            raise StoreFormatError(msg) from None
        if rank in ranked.setdefault(key, {}):
            msg = f"{path}:{number} repeats rank {rank} for {key[1]!r} on {key[0]!r}."
            raise StoreFormatError(msg)
        ranked[key][rank] = row["review_id"].strip()
    try:
        return [
            GoldOrdering(
                attribute=attribute,
                annotator=annotator,
                review_ids=[by_rank[rank] for rank in sorted(by_rank)],
            )
            for (attribute, annotator), by_rank in sorted(ranked.items())
        ]
    except ValidationError as e:
        msg = f"{path} holds an invalid gold ordering: {e.errors()[0]['msg']}"
        raise StoreFormatError(msg) from None


def read_annotations(marks: Path, gold: Path | None = None) -> AnnotationSet:
    """Helpfulness marks plus, when the file exists, gold orderings."""
    orderings = read_orderings(gold) if gold is not None and gold.is_file() else []
    try:
        return AnnotationSet(records=read_marks(marks), orderings=orderings)
    except ValidationError as e:
        msg = f"{marks}: {e.errors()[0]['msg']}"
        raise StoreFormatError(msg) from None


def write_pool(path: Path, entries: Iterable[PoolEntry]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as csv_file:
        writer = csv.writer(csv_file, lineterminator="\n")
        writer.writerow(POOL_COLUMNS)
        for entry in entries:
            methods = ";".join(entry.methods)
            writer.writerow([entry.category, entry.attribute, entry.review_id, methods, entry.text])
