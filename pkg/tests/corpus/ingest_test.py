from pathlib import Path

import pytest
from corpus.ingest import Preprocessor, ingest
from errors import StoreMissingError
from schemas.configuration import PipelineConfig
from schemas.reviews import CorpusStats
from storage.corpus import read_corpus, read_stats


def test_ingest_counts_every_outcome(configuration: PipelineConfig, reviews_file: Path) -> None:
    stats = ingest(reviews_file, configuration)
    expected = CorpusStats(
        total_ingested=6,
        kept=2,
        dropped_short=1,
        dropped_nonnegative=3,
        positive_kept=1,
        malformed=2,
        duplicates=1,
    )
    assert expected == stats
    assert expected == read_stats(configuration.stores.stats)


def test_ingest_stores_both_partitions(configuration: PipelineConfig, reviews_file: Path) -> None:
    ingest(reviews_file, configuration)
    corpus = read_corpus(configuration.stores.corpus.path)
    assert ["r1", "r6"] == sorted(review.id_ for review in corpus.negative)
    assert ["r4"] == [review.id_ for review in corpus.positive]
    assert ["laptop", "phone"] == corpus.categories


def test_ingest_cleans_and_tokenizes(configuration: PipelineConfig, reviews_file: Path) -> None:
    ingest(reviews_file, configuration)
    corpus = read_corpus(configuration.stores.corpus.path)
    expected = ["keyboard", "keys", "stuck", "screen", "flickers", "constantly"]
    assert expected == corpus.get("r6").tokens
    assert corpus.get("r1").raw_text.startswith("Battery died")


def test_ingest_is_deterministic(configuration: PipelineConfig, reviews_file: Path) -> None:
    ingest(reviews_file, configuration)
    first = configuration.stores.corpus.path.read_bytes()
    ingest(reviews_file, configuration)
    assert first == configuration.stores.corpus.path.read_bytes()


def test_ingest_append_rejects_stored_ids(
    configuration: PipelineConfig,
    reviews_file: Path,
    tmp_path: Path,
) -> None:
    ingest(reviews_file, configuration)
    more = tmp_path / "more.jsonl"
    more.write_text(
        '{"id": "r1", "product_id": "p1", "category": "phone", "score": 1, "text": "again"}\n'
        '{"id": "r8", "product_id": "p4", "category": "phone", "score": 1, '
        '"text": "Screen cracked within one week of normal use"}\n',
        encoding="utf-8",
    )
    stats = ingest(more, configuration, append=True)
    assert stats.kept == 3
    assert stats.duplicates == 2
    assert stats.total_ingested == 7
    corpus = read_corpus(configuration.stores.corpus.path)
    assert "r8" in corpus
    assert len(corpus.negative) == 3


def test_ingest_missing_file(configuration: PipelineConfig, tmp_path: Path) -> None:
    with pytest.raises(StoreMissingError):
        ingest(tmp_path / "absent.jsonl", configuration)


def test_preprocessor_requires_stopword_file(
    configuration: PipelineConfig,
    tmp_path: Path,
) -> None:
    stopwords = configuration.stores.stopwords.model_copy(update={"directory": tmp_path})
    stores = configuration.stores.model_copy(update={"stopwords": stopwords})
    with pytest.raises(StoreMissingError):
        Preprocessor.from_configuration(configuration.model_copy(update={"stores": stores}))


def test_preprocessor_matches_query_and_review_handling(preprocessor: Preprocessor) -> None:
    assert ["battery", "life"] == preprocessor("The <b>Battery</b> life!")
    assert [] == preprocessor("the and of")



def test_ingest_skips_lines_that_are_not_utf8(
    configuration: PipelineConfig,
    reviews_file: Path,
    tmp_path: Path,
) -> None:
    mixed = tmp_path / "mixed.jsonl"
    mixed.write_bytes(
        reviews_file.read_bytes()
        + b'{"id": "x1", "product_id": "p9", "category": "phone", "score": 1, "text": "\xff"}\n'
        + b"\xff\xfe\n",
    )
    stats = ingest(mixed, configuration)
    assert stats.malformed == 4
    assert stats.kept == 2
    assert stats.total_ingested == 6
    corpus = read_corpus(configuration.stores.corpus.path)
    assert "x1" not in corpus
