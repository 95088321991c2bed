from collections import Counter

import pytest
from embedding.similarity import attribute_similarity
from lexicon.polarity import polarity
from schemas.reviews import Review
from synthetic import (
    AttributeCorpus,
    attribute_corpus,
    lexicon_corpus,
    review_lines,
    sentence_reviews,
    twin_corpus,
)


def test_lexicon_corpus_shape() -> None:
    corpus = lexicon_corpus(size=200)
    scores = Counter(review.score for review in corpus.reviews)
    assert {1: 100, 5: 100} == scores
    assert {"phone", "laptop"} == {review.category for review in corpus.reviews}
    assert all(len(review.tokens) == 7 for review in corpus.reviews)
    assert len(corpus.seeds.negative) == len(corpus.seeds.positive) == 10


def test_planted_words_stay_on_their_side() -> None:
    corpus = lexicon_corpus(size=400)
    for review in corpus.reviews:
        tokens = set(review.tokens)
        if review.is_negative:
            assert not tokens & corpus.planted_positive
            assert not tokens & corpus.seeds.positive
        else:
            assert not tokens & corpus.planted_negative


def test_lexicon_corpus_is_seeded() -> None:
    assert lexicon_corpus(seed=1, size=50) == lexicon_corpus(seed=1, size=50)
    assert lexicon_corpus(seed=1, size=50) != lexicon_corpus(seed=2, size=50)


def test_attribute_corpus_similarities(synthetic_attributes: AttributeCorpus) -> None:
    corpus = synthetic_attributes
    reviews = {review.id_: review for review in corpus.reviews}
    assert len(reviews) == 40
    for attribute in corpus.attributes:
        gold = reviews[corpus.gold[attribute]]
        assert attribute_similarity([attribute], gold.tokens, corpus.table) == pytest.approx(1.0)
        assert polarity(gold.tokens, corpus.lexicon).e_n == 0.0
        for j in range(3):
            distractor = reviews[f"{attribute}-d{j}"]
            similarity = attribute_similarity([attribute], distractor.tokens, corpus.table)
            assert similarity == pytest.approx(1 / 3)
    e_n = [polarity(reviews[f"battery-d{j}"].tokens, corpus.lexicon).e_n for j in range(3)]
    assert [-1.0, 1.0, 0.0] == e_n


def test_fewer_attributes() -> None:
    corpus = attribute_corpus(attributes=3, synonyms=2)
    assert ["battery", "screen", "logistics"] == corpus.attributes
    assert corpus.table.dim == 5


def test_twins_never_share_a_sentence() -> None:
    sentences, twins = twin_corpus(sentences=300)
    assert len(sentences) == 300
    for first, second in twins:
        assert not any(first in sentence and second in sentence for sentence in sentences)
        assert any(first in sentence for sentence in sentences)


def test_review_lines_round_trip_through_the_raw_format() -> None:
    reviews = sentence_reviews([["battery", "died"], ["screen", "cracked"]])
    lines = list(review_lines(reviews))
    assert ["s00000", "s00001"] == [Review.model_validate_json(line).id_ for line in lines]
    assert '"text":"battery died"' in lines[0]
    assert "tokens" not in lines[0]
