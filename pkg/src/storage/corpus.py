"""The normalized corpus store: JSONL reviews with tokens, plus a stats sidecar."""
import json
from collections.abc import Iterable, Iterator
from pathlib import Path

from errors import EmptyCorpusError, StoreFormatError, StoreMissingError, UnknownReviewError
from pydantic import ValidationError
from schemas.reviews import CorpusStats, Review


class CorpusStore:
    """Cleaned reviews keyed by id, split into the negative and 5-star partitions."""

    def __init__(self, reviews: Iterable[Review] = ()) -> None:
        self._reviews: dict[str, Review] = {}
        for review in reviews:
            if review.id_ in self._reviews:
                msg = f"Review id {review.id_!r} occurs twice in the corpus."
                raise StoreFormatError(msg)
            self._reviews[review.id_] = review

    def __len__(self) -> int:
        return len(self._reviews)

    def __iter__(self) -> Iterator[Review]:
        return iter(self._reviews.values())

    def __contains__(self, review_id: object) -> bool:
        return review_id in self._reviews

    def get(self, review_id: str) -> Review:
        try:
            return self._reviews[review_id]
        except KeyError:
            msg = f"Unknown review id {review_id!r}."
            raise UnknownReviewError(msg) from None

    @property
    def negative(self) -> list[Review]:
        return [review for review in self._reviews.values() if review.is_negative]

    @property
    def positive(self) -> list[Review]:
        return [review for review in self._reviews.values() if review.is_positive]

    @property
    def categories(self) -> list[str]:
        return sorted({review.category for review in self.negative})

    def require_nonempty(self) -> None:
        if not self._reviews:
            msg = "The corpus store holds no reviews."
            raise EmptyCorpusError(msg)


def _dump(review: Review) -> str:
    return json.dumps(review.model_dump(by_alias=True), ensure_ascii=False)


def read_corpus(path: Path) -> CorpusStore:
    if not path.is_file():
        msg = f"Corpus store {path} does not exist, run `ingest` first."
        raise StoreMissingError(msg)
    reviews = []
    with path.open(encoding="utf-8") as corpus_file:
        for number, line in enumerate(corpus_file, start=1):
            if not line.strip():
                continue
            try:
                reviews.append(Review.model_validate_json(line))
            except ValidationError as e:
                msg = f"{path}:{number} is not a valid corpus record: {e}"
                raise StoreFormatError(msg) from None
    return CorpusStore(reviews)


def write_corpus(path: Path, reviews: Iterable[Review], *, append: bool = False) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("a" if append else "w", encoding="utf-8", newline="\n") as corpus_file:
        for review in reviews:
            corpus_file.write(_dump(review) + "\n")


def write_stats(path: Path, stats: CorpusStats) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(stats.model_dump(), indent=2) + "\n", encoding="utf-8")


def read_stats(path: Path) -> CorpusStats:
    if not path.is_file():
        return CorpusStats()
    return CorpusStats.model_validate_json(path.read_text(encoding="utf-8"))
