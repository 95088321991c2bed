from pathlib import Path

import pytest
from errors import EmptyCorpusError, StoreFormatError, StoreMissingError, UnknownReviewError
from schemas.reviews import CorpusStats, Review
from storage.corpus import CorpusStore, read_corpus, read_stats, write_corpus, write_stats


def _review(review_id: str, score: int = 1, category: str = "phone") -> Review:
    return Review(
        id_=review_id,
        product_id="p1",
        category=category,
        score=score,
        raw_text="battery died after two days",
        tokens=["battery", "died", "two", "days"],
    )


def test_partitions() -> None:
    store = CorpusStore(
        [_review("a"), _review("b", score=5), _review("c", category="laptop"), _review("d", 3)],
    )
    assert ["a", "c"] == [review.id_ for review in store.negative]
    assert ["b"] == [review.id_ for review in store.positive]
    assert ["laptop", "phone"] == store.categories
    assert "d" in store
    assert len(store) == 4


def test_duplicate_ids_are_rejected() -> None:
    with pytest.raises(StoreFormatError):
        CorpusStore([_review("a"), _review("a")])


def test_unknown_id() -> None:
    with pytest.raises(UnknownReviewError):
        CorpusStore([_review("a")]).get("b")


def test_empty_store() -> None:
    with pytest.raises(EmptyCorpusError):
        CorpusStore().require_nonempty()


def test_written_corpus_reads_back(tmp_path: Path) -> None:
    path = tmp_path / "corpus.jsonl"
    write_corpus(path, [_review("a")])
    write_corpus(path, [_review("b", score=5)], append=True)
    store = read_corpus(path)
    assert [_review("a"), _review("b", score=5)] == list(store)
    assert '"id": "a"' in path.read_text(encoding="utf-8")


def test_invalid_record_names_the_line(tmp_path: Path) -> None:
    path = tmp_path / "corpus.jsonl"
    write_corpus(path, [_review("a")])
    with path.open("a", encoding="utf-8") as corpus_file:
        corpus_file.write('{"id": "b", "score": 1}\n')
    with pytest.raises(StoreFormatError, match=":2"):
        read_corpus(path)


def test_missing_corpus(tmp_path: Path) -> None:
    with pytest.raises(StoreMissingError, match="ingest"):
        read_corpus(tmp_path / "corpus.jsonl")


def test_stats(tmp_path: Path) -> None:
    path = tmp_path / "stats.json"
    assert CorpusStats() == read_stats(path)
    stats = CorpusStats(total_ingested=3, kept=1, dropped_short=1, dropped_nonnegative=1)
    write_stats(path, stats)
    assert stats == read_stats(path)
