from pathlib import Path

import pytest
from errors import StoreFormatError, StoreMissingError
from schemas.evaluation import PoolEntry
from storage.annotations import (
    read_annotations,
    read_marks,
    read_orderings,
    write_pool,
)


def _write(tmp_path: Path, name: str, text: str) -> Path:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


MARKS = """attribute,annotator,review_id,helpful
battery,ann1,r1,1
battery,ann2,r1,0
screen,ann1,r2,1
"""
GOLD = """attribute,annotator,rank,review_id
battery,ann1,2,r2
battery,ann1,1,r1
battery,ann1,10,r3
screen,ann1,1,r2
"""


def test_read_marks(tmp_path: Path) -> None:
    marks = read_marks(_write(tmp_path, "annotations.csv", MARKS))
    assert [True, False, True] == [mark.helpful for mark in marks]
    assert marks[2].attribute == "screen"


def test_helpful_must_be_binary(tmp_path: Path) -> None:
    path = _write(tmp_path, "annotations.csv", MARKS + "screen,ann2,r2,yes\n")
    with pytest.raises(StoreFormatError, match=":5"):
        read_marks(path)


def test_missing_columns(tmp_path: Path) -> None:
    path = _write(tmp_path, "annotations.csv", "attribute,review_id\nbattery,r1\n")
    with pytest.raises(StoreFormatError, match="annotator, helpful"):
        read_marks(path)


def test_orderings_sort_by_numeric_rank(tmp_path: Path) -> None:
    orderings = read_orderings(_write(tmp_path, "gold.csv", GOLD))
    assert [("battery", ["r1", "r2", "r3"]), ("screen", ["r2"])] == [
        (ordering.attribute, ordering.review_ids) for ordering in orderings
    ]


@pytest.mark.parametrize(
    "extra",
    ["battery,ann1,2,r4\n", "battery,ann1,first,r4\n", "battery,ann1,4,r1\n"],
)
def test_invalid_orderings(tmp_path: Path, extra: str) -> None:
    with pytest.raises(StoreFormatError):
        read_orderings(_write(tmp_path, "gold.csv", GOLD + extra))


def test_gold_file_is_optional(tmp_path: Path) -> None:
    annotations = read_annotations(
        _write(tmp_path, "annotations.csv", MARKS),
        tmp_path / "gold.csv",
    )
    assert annotations.orderings == []
    assert ["battery", "screen"] == annotations.attributes


def test_duplicate_marks(tmp_path: Path) -> None:
    path = _write(tmp_path, "annotations.csv", MARKS + "battery,ann1,r1,0\n")
    with pytest.raises(StoreFormatError, match="Duplicate"):
        read_annotations(path)


def test_missing_marks(tmp_path: Path) -> None:
    with pytest.raises(StoreMissingError):
        read_annotations(tmp_path / "annotations.csv")


def test_write_pool(tmp_path: Path) -> None:
    path = tmp_path / "pool" / "pool.csv"
    entries = [
        PoolEntry(
            category="phone",
            attribute="battery",
            review_id="r1",
            methods=["BM25", "GloVe_Sigmoid"],
            text="battery died, fast",
        ),
    ]
    write_pool(path, entries)
    assert path.read_text(encoding="utf-8").splitlines() == [
        "category,attribute,review_id,methods,text",
        'phone,battery,r1,BM25;GloVe_Sigmoid,"battery died, fast"',
    ]
