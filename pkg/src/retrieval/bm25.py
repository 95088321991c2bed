"""Okapi BM25 over an `InvertedIndex`."""
import math
from collections.abc import Sequence

from errors import UnknownReviewError

from retrieval.index import InvertedIndex

DEFAULT_K1 = 1.2
DEFAULT_B = 0.75


def idf(term: str, index: InvertedIndex) -> float:
    df = index.df(term)
    return math.log((index.doc_count - df + 0.5) / (df + 0.5) + 1)


def bm25_score(
    query: Sequence[str],
    review_id: str,
    index: InvertedIndex,
    k1: float = DEFAULT_K1,
    b: float = DEFAULT_B,
) -> float:
    """Sum of the per-term BM25 contributions; repeated query terms count repeatedly."""
    if review_id not in index.doc_len:
        msg = f"Review {review_id!r} is not in the index."
        raise UnknownReviewError(msg)
    average = index.avg_doc_len or 1.0
    length_norm = 1 - b + b * index.doc_len[review_id] / average
    score = 0.0
    for term in query:
        if (tf := index.tf(term, review_id)) == 0:
            continue
        score += idf(term, index) * tf * (k1 + 1) / (tf + k1 * length_norm)
    return score


def matching_reviews(query: Sequence[str], index: InvertedIndex) -> list[str]:
    """Ids of the reviews containing at least one query term."""
    found = {posting.review_id for term in set(query) for posting in index.postings.get(term, ())}
    return sorted(found)


def search(
    query: Sequence[str],
    index: InvertedIndex,
    k1: float = DEFAULT_K1,
    b: float = DEFAULT_B,
) -> list[tuple[str, float]]:
    """Every matching review with its score, best first, ties by ascending id."""
    scored = [
        (review_id, bm25_score(query, review_id, index, k1, b))
        for review_id in matching_reviews(query, index)
    ]
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored
