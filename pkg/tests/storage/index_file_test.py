from pathlib import Path

import pytest
from errors import IndexVersionError, StoreFormatError, StoreMissingError
from retrieval.index import InvertedIndex, build_index
from schemas.reviews import Review
from storage.index import FORMAT_VERSION, MAGIC, dump_index, read_index, write_index


def _review(review_id: str, text: str, score: int = 1) -> Review:
    return Review(
        id_=review_id,
        product_id="p1",
        category="phone",
        score=score,
        raw_text=text,
        tokens=text.split(),
    )


REVIEWS = [
    _review("r2", "screen cracked screen flickers"),
    _review("r1", "battery died battery hot charger"),
    _review("r3", "電池 很 差 battery"),
    _review("r4", "great battery", score=5),
]


@pytest.fixture()
def index() -> InvertedIndex:
    return build_index(REVIEWS)


def test_written_index_reads_back_equal(tmp_path: Path, index: InvertedIndex) -> None:
    path = tmp_path / "index.bin"
    write_index(path, index)
    assert index == read_index(path)


def test_rebuild_is_byte_identical(index: InvertedIndex) -> None:
    assert dump_index(index) == dump_index(build_index(list(reversed(REVIEWS))))


def test_header(index: InvertedIndex) -> None:
    data = dump_index(index)
    assert data.startswith(MAGIC)
    assert data[len(MAGIC)] == FORMAT_VERSION


def test_version_mismatch(tmp_path: Path, index: InvertedIndex) -> None:
    data = bytearray(dump_index(index))
    data[len(MAGIC)] = FORMAT_VERSION + 1
    path = tmp_path / "index.bin"
    path.write_bytes(bytes(data))
    with pytest.raises(IndexVersionError):
        read_index(path)


def test_not_an_index(tmp_path: Path) -> None:
    path = tmp_path / "index.bin"
    path.write_bytes(b"battery screen")
    with pytest.raises(StoreFormatError, match="not an index file"):
        read_index(path)


@pytest.mark.parametrize("cut", [1, 5, 9])
def test_truncated(tmp_path: Path, index: InvertedIndex, cut: int) -> None:
    path = tmp_path / "index.bin"
    path.write_bytes(dump_index(index)[:-cut])
    with pytest.raises(StoreFormatError):
        read_index(path)


def test_trailing_bytes(tmp_path: Path, index: InvertedIndex) -> None:
    path = tmp_path / "index.bin"
    path.write_bytes(dump_index(index) + b"\x00")
    with pytest.raises(StoreFormatError, match="trailing"):
        read_index(path)


def test_missing(tmp_path: Path) -> None:
    with pytest.raises(StoreMissingError):
        read_index(tmp_path / "index.bin")


def test_terms_longer_than_a_short_length_prefix(tmp_path: Path) -> None:
    long_term = "é" * 40_000
    index = build_index([_review("r1", f"battery {long_term}"), _review("r" * 70_000, long_term)])
    path = tmp_path / "index.bin"
    write_index(path, index)
    assert index == read_index(path)


def test_earlier_format_is_refused(tmp_path: Path, index: InvertedIndex) -> None:
    data = bytearray(dump_index(index))
    data[len(MAGIC)] = 1
    path = tmp_path / "index.bin"
    path.write_bytes(bytes(data))
    with pytest.raises(IndexVersionError, match="format 1"):
        read_index(path)
