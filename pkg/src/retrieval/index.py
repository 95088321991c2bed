from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from typing import NamedTuple

from errors import EmptyCorpusError, UnknownReviewError
from schemas.reviews import Review


class Posting(NamedTuple):
    review_id: str
    tf: int


class InvertedIndex:
    """Term postings and document lengths over tokenized reviews."""

    def __init__(
        self,
        postings: Mapping[str, Sequence[Posting]],
        doc_len: Mapping[str, int],
    ) -> None:
        self.postings: dict[str, tuple[Posting, ...]] = {
            term: tuple(sorted(postings[term])) for term in sorted(postings)
        }
        self.doc_len: dict[str, int] = {
            review_id: doc_len[review_id] for review_id in sorted(doc_len)
        }
        self._frequencies: dict[str, dict[str, int]] = {}
        for term, term_postings in self.postings.items():
            for posting in term_postings:
                if posting.review_id not in self.doc_len:
                    msg = f"Posting of {term!r} refers to unindexed review {posting.review_id!r}."
                    raise UnknownReviewError(msg)
                self._frequencies.setdefault(posting.review_id, {})[term] = posting.tf

    @property
    def doc_count(self) -> int:
        return len(self.doc_len)

    @property
    def avg_doc_len(self) -> float:
        if not self.doc_len:
            return 0.0
        return sum(self.doc_len.values()) / len(self.doc_len)

    def df(self, term: str) -> int:
        return len(self.postings.get(term, ()))

    def tf(self, term: str, review_id: str) -> int:
        if review_id not in self.doc_len:
            msg = f"Review {review_id!r} is not in the index."
            raise UnknownReviewError(msg)
        return self._frequencies.get(review_id, {}).get(term, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InvertedIndex):
            return NotImplemented
        return self.postings == other.postings and self.doc_len == other.doc_len

    __hash__ = None  # type: ignore[assignment]


def build_index(reviews: Iterable[Review]) -> InvertedIndex:
    """Index the score-1 reviews; other partitions are skipped."""
    postings: dict[str, list[Posting]] = {}
    doc_len: dict[str, int] = {}
    for review in reviews:
        if not review.is_negative:
            continue
        doc_len[review.id_] = len(review.tokens)
        for term, tf in Counter(review.tokens).items():
            postings.setdefault(term, []).append(Posting(review.id_, tf))
    if not doc_len:
        msg = "No negative reviews to index."
        raise EmptyCorpusError(msg)
    return InvertedIndex(postings, doc_len)
