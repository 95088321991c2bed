import logging
import sys
from pathlib import Path

from errors import StoreMissingError
from pydantic import ValidationError
from schemas.configuration import PipelineConfig
from schemas.reviews import CorpusStats, Review
from storage.corpus import read_corpus, read_stats, write_corpus, write_stats
from tqdm import tqdm

from corpus.cleaning import clean_text, filter_review, load_stopwords, tokenize
from corpus.tokenizers import Segmenter, get_tokenizer

logger = logging.getLogger(__name__)


class Preprocessor:
    """Clean and tokenize text the same way for reviews and attribute queries."""

    def __init__(self, segmenter: Segmenter, stopwords: frozenset[str], min_len: int = 5) -> None:
        self.segmenter = segmenter
        self.stopwords = stopwords
        self.min_len = min_len

    @classmethod
    def from_configuration(cls, configuration: PipelineConfig) -> "Preprocessor":
        stopword_file = configuration.stores.stopwords.path
        if not stopword_file.is_file():
            msg = f"Stopword file {stopword_file} does not exist."
            raise StoreMissingError(msg)
        return cls(
            segmenter=get_tokenizer(
                configuration.corpus.tokenizer,
                configuration.corpus.dictionary,
            ),
            stopwords=load_stopwords(stopword_file),
            min_len=configuration.corpus.min_len,
        )

    def __call__(self, raw: str) -> list[str]:
        return tokenize(clean_text(raw), self.segmenter, self.stopwords)


def ingest(path: Path, configuration: PipelineConfig, *, append: bool = False) -> CorpusStats:
    """Clean, tokenize and filter the reviews in `path` into the corpus store."""
    if not path.is_file():
        msg = f"Review file {path} does not exist."
        raise StoreMissingError(msg)

    preprocess = Preprocessor.from_configuration(configuration)
    store_path = configuration.stores.corpus.path
    seen: set[str] = set()
    previous = CorpusStats()
    if append and store_path.is_file():
        seen = {review.id_ for review in read_corpus(store_path)}
        previous = read_stats(configuration.stores.stats)

    counts = dict.fromkeys(CorpusStats.model_fields, 0)
    stored: list[Review] = []
    with path.open("rb") as review_file:
        lines = tqdm(review_file, desc="ingest", unit=" lines", disable=not sys.stderr.isatty())
        for number, raw_line in enumerate(lines, start=1):
            try:
                line = raw_line.decode("utf-8")
            except UnicodeDecodeError as e:
                counts["malformed"] += 1
                logger.warning("Skipping line %d of %s, not utf-8: %s", number, path, e.reason)
                continue
            if not line.strip():
                continue
            try:
                review = Review.model_validate_json(line)
            except ValidationError as e:
                counts["malformed"] += 1
                logger.warning("Skipping malformed line %d of %s: %s", number, path, e.errors()[0])
                continue
            if review.id_ in seen:
                counts["duplicates"] += 1
                logger.warning("Skipping duplicate review id %r on line %d.", review.id_, number)
                continue
            seen.add(review.id_)
            counts["total_ingested"] += 1

            if not review.is_negative:
                counts["dropped_nonnegative"] += 1
                if not review.is_positive:
                    continue
            tokens = preprocess(review.raw_text)
            if not filter_review(tokens, preprocess.min_len):
                if review.is_negative:
                    counts["dropped_short"] += 1
                continue
            counts["kept" if review.is_negative else "positive_kept"] += 1
            stored.append(review.model_copy(update={"tokens": tokens}))

    write_corpus(store_path, stored, append=append)
    stats = CorpusStats(**{field: previous.model_dump()[field] + n for field, n in counts.items()})
    write_stats(configuration.stores.stats, stats)
    logger.info(
        "Ingested %d reviews from %s: kept %d negative, %d 5-star as lexicon context.",
        counts["total_ingested"],
        path,
        counts["kept"],
        counts["positive_kept"],
    )
    return stats
