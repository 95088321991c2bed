import itertools

import numpy as np
import pytest
from embedding.glove import build_vocabulary, cooccurrence_matrix, fit_glove, train_toy_embeddings
from embedding.similarity import most_similar
from errors import EmptyCooccurrenceError, VocabularyTooSmallError
from schemas.configuration import TrainConfig
from synthetic import twin_corpus

SENTENCES = [
    ["battery", "died", "fast", "battery"],
    ["screen", "cracked", "battery", "hot"],
    ["charger", "broken", "screen"],
]


def test_build_vocabulary_orders_by_frequency_then_word() -> None:
    assert ["battery", "screen", "broken", "charger", "cracked", "died", "fast", "hot"] == (
        build_vocabulary(SENTENCES)
    )
    assert ["battery", "screen"] == build_vocabulary(SENTENCES, min_count=2)


def test_cooccurrence_matrix_matches_brute_force() -> None:
    sentences, _ = twin_corpus(seed=4, sentences=200)
    sentences = sentences + SENTENCES
    vocabulary = build_vocabulary(sentences)
    index = {word: i for i, word in enumerate(vocabulary)}
    for window in (1, 2, 5):
        expected: dict[tuple[int, int], float] = {}
        for sentence in sentences:
            for (i, a), (j, b) in itertools.product(enumerate(sentence), repeat=2):
                if i != j and abs(i - j) <= window:
                    key = (index[a], index[b])
                    expected[key] = expected.get(key, 0.0) + 1.0
        assert expected == cooccurrence_matrix(sentences, vocabulary, window)


def test_cooccurrence_matrix_is_symmetric() -> None:
    matrix = cooccurrence_matrix(SENTENCES, build_vocabulary(SENTENCES), 2)
    assert all(matrix[(j, i)] == count for (i, j), count in matrix.items())


def test_fit_glove_is_deterministic() -> None:
    config = TrainConfig(dim=8, window=2, iterations=5, seed=3)
    first = fit_glove(SENTENCES, config)
    second = fit_glove(SENTENCES, config)
    assert first.losses == second.losses
    assert np.array_equal(first.table.matrix, second.table.matrix)


def test_train_toy_embeddings_covers_vocabulary() -> None:
    table = train_toy_embeddings(SENTENCES, TrainConfig(dim=4, window=2, iterations=3))
    assert table.dim == 4
    assert set(build_vocabulary(SENTENCES)) == set(table.words)


def test_vocabulary_too_small() -> None:
    with pytest.raises(VocabularyTooSmallError):
        fit_glove([["battery", "battery"]], TrainConfig(dim=4))


def test_zero_window_has_no_cooccurrence() -> None:
    with pytest.raises(EmptyCooccurrenceError):
        fit_glove(SENTENCES, TrainConfig(dim=4, window=0))


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_loss_decreases_over_the_first_iterations(seed: int) -> None:
    sentences, _ = twin_corpus(seed=seed, sentences=400)
    fit = fit_glove(sentences, TrainConfig(dim=10, window=4, iterations=10, seed=seed))
    assert len(fit.losses) == 10
    assert all(later < earlier for earlier, later in itertools.pairwise(fit.losses))


@pytest.mark.slow()
def test_context_twins_are_mutual_neighbours() -> None:
    hits = 0
    for seed in (1, 2, 3):
        sentences, twins = twin_corpus(seed=seed)
        table = fit_glove(
            sentences,
            TrainConfig(dim=16, window=4, iterations=50, learning_rate=0.05, seed=seed),
        ).table
        mutual = all(
            b in {word for word, _ in most_similar(a, table, k=3)}
            and a in {word for word, _ in most_similar(b, table, k=3)}
            for a, b in twins
        )
        hits += mutual
    assert hits >= 2
