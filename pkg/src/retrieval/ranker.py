import logging
from collections.abc import Iterable, Sequence
from typing import NamedTuple

from corpus.ingest import Preprocessor
from embedding.similarity import cosine, mean_vector
from embedding.table import EmbeddingTable, Vector
from errors import DegenerateVectorError, EmptyQueryError, NoRepresentationError, StoreMissingError
from lexicon.polarity import polarity
from reward import reward
from schemas.configuration import PipelineConfig, RetrievalConfig
from schemas.lexicon import EmotionLexicon
from schemas.ranking import MethodId, MethodKind, RankedEntry, RankedList
from schemas.reviews import Review
from storage.corpus import CorpusStore, read_corpus
from storage.index import read_index
from storage.lexicons import read_lexicon
from storage.vectors import load_table

from retrieval.bm25 import bm25_score, search
from retrieval.index import InvertedIndex, build_index

logger = logging.getLogger(__name__)


class ReviewProfile(NamedTuple):
    vector: Vector
    e_n: float


class Stores:
    """Everything a query reads, loaded once and shared by all queries."""

    def __init__(
        self,
        corpus: CorpusStore,
        preprocess: Preprocessor,
        *,
        index: InvertedIndex | None = None,
        table: EmbeddingTable | None = None,
        lexicon: EmotionLexicon | None = None,
        retrieval: RetrievalConfig | None = None,
    ) -> None:
        self.corpus = corpus
        self.preprocess = preprocess
        self.index = index
        self.table = table
        self.lexicon = lexicon
        self.retrieval = retrieval or RetrievalConfig()
        self._profiles: dict[str, ReviewProfile | None] = {}

    @classmethod
    def load(cls, configuration: PipelineConfig, methods: Iterable[MethodId]) -> "Stores":
        """Read the stores the given methods need from the configured locations."""
        kinds = {method.kind for method in methods}
        stores = configuration.stores
        corpus = read_corpus(stores.corpus.path)
        corpus.require_nonempty()
        return cls(
            corpus,
            Preprocessor.from_configuration(configuration),
            index=read_index(stores.index.path) if MethodKind.BM25 in kinds else None,
            table=load_table(stores.vectors.path) if MethodKind.EMBED in kinds else None,
            lexicon=read_lexicon(stores.lexicon.path) if MethodKind.EMBED in kinds else None,
            retrieval=configuration.retrieval,
        )

    def require_index(self) -> InvertedIndex:
        if self.index is None:
            self.index = build_index(self.corpus)
        return self.index

    def require_embeddings(self) -> tuple[EmbeddingTable, EmotionLexicon]:
        if self.table is None or self.lexicon is None:
            msg = "Embedding methods need both a vector table and an emotion lexicon."
            raise StoreMissingError(msg)
        return self.table, self.lexicon

    def candidates(self, category: str | None = None) -> list[Review]:
        """Score-1 reviews, optionally of one product category, by ascending id."""
        reviews = [
            review
            for review in self.corpus.negative
            if category is None or review.category == category
        ]
        return sorted(reviews, key=lambda review: review.id_)

    def profile(self, review: Review) -> ReviewProfile | None:
        """Mean vector and polarity of a review, None when no token has a vector."""
        if review.id_ not in self._profiles:
            table, lexicon = self.require_embeddings()
            try:
                vector = mean_vector(review.tokens, table).vector
            except NoRepresentationError:
                self._profiles[review.id_] = None
            else:
                e_n = polarity(review.tokens, lexicon).e_n
                self._profiles[review.id_] = ReviewProfile(vector=vector, e_n=e_n)
        return self._profiles[review.id_]


def rank_score(c_s: float, e_c: float) -> float:
    return c_s * e_c


def _query(attribute: str, stores: Stores) -> list[str]:
    if not (query := stores.preprocess(attribute)):
        msg = f"Attribute {attribute!r} has no tokens after cleaning."
        raise EmptyQueryError(msg)
    return query


def _sort(entries: list[RankedEntry]) -> list[RankedEntry]:
    return sorted(entries, key=lambda entry: (-entry.score, entry.review_id))


def _embed_entries(
    query: Sequence[str],
    method: MethodId,
    reviews: Iterable[Review],
    stores: Stores,
) -> tuple[list[RankedEntry], int]:
    if method.variant is None:
        msg = f"Method {method.name} is not an embedding method."
        raise ValueError(msg)
    table, _ = stores.require_embeddings()
    attribute_vector = mean_vector(query, table).vector
    entries = []
    excluded = 0
    for review in reviews:
        if (profile := stores.profile(review)) is None:
            excluded += 1
            continue
        try:
            c_s = cosine(attribute_vector, profile.vector)
        except DegenerateVectorError:
            if not attribute_vector.any():
                raise
            excluded += 1
            continue
        e_c = reward(profile.e_n, method.variant)
        entries.append(
            RankedEntry(
                review_id=review.id_,
                score=rank_score(c_s, e_c),
                c_s=c_s,
                e_n=profile.e_n,
                e_c=e_c,
            ),
        )
    return entries, excluded


def rank(
    attribute: str,
    method: MethodId,
    k: int,
    stores: Stores,
    category: str | None = None,
) -> RankedList:
    """The top `k` score-1 reviews for `attribute` under `method`."""
    query = _query(attribute, stores)
    if k <= 0:
        return RankedList(attribute=query, method=method)

    reviews = stores.candidates(category)
    if method.kind == MethodKind.BM25:
        allowed = {review.id_ for review in reviews}
        retrieval = stores.retrieval
        scored = search(query, stores.require_index(), retrieval.k1, retrieval.b)
        entries = [
            RankedEntry(review_id=review_id, score=score)
            for review_id, score in scored
            if review_id in allowed
        ]
        excluded = 0
    else:
        entries, excluded = _embed_entries(query, method, reviews, stores)
        if excluded:
            logger.info("%d reviews have no in-vocabulary token and were not ranked.", excluded)
    return RankedList(
        attribute=query,
        method=method,
        entries=_sort(entries)[:k],
        excluded=excluded,
    )


def order_reviews(
    attribute: str,
    method: MethodId,
    review_ids: Iterable[str],
    stores: Stores,
) -> list[str]:
    """The method's ordering of the given reviews; reviews it cannot score go last, by id."""
    query = _query(attribute, stores)
    reviews = [stores.corpus.get(review_id) for review_id in sorted(set(review_ids))]
    if method.kind == MethodKind.BM25:
        index = stores.require_index()
        retrieval = stores.retrieval
        entries = [
            RankedEntry(
                review_id=review.id_,
                score=bm25_score(query, review.id_, index, retrieval.k1, retrieval.b),
            )
            for review in reviews
        ]
    else:
        entries, _ = _embed_entries(query, method, reviews, stores)
    ordered = [entry.review_id for entry in _sort(entries)]
    scored = set(ordered)
    return ordered + [review.id_ for review in reviews if review.id_ not in scored]
