"""Desk-scale GloVe: windowed co-occurrence counts fitted by weighted least squares.

Meant for self-contained tests and small corpora; full-size tables trained
elsewhere load through `storage.vectors.load_table`.
"""
import logging
import sys
from collections import Counter
from collections.abc import Iterable, Sequence
from typing import NamedTuple

import numpy as np
import numpy.typing as npt
from errors import EmptyCooccurrenceError, VocabularyTooSmallError
from schemas.configuration import TrainConfig
from tqdm import tqdm

from embedding.table import EmbeddingTable

logger = logging.getLogger(__name__)

WEIGHT_EXPONENT = 0.75


class GloveFit(NamedTuple):
    table: EmbeddingTable
    losses: list[float]


class _Cooccurrences(NamedTuple):
    rows: npt.NDArray[np.int64]
    cols: npt.NDArray[np.int64]
    counts: npt.NDArray[np.float64]


def build_vocabulary(sentences: Iterable[Sequence[str]], min_count: int = 1) -> list[str]:
    """Words seen at least `min_count` times, most frequent first, ties alphabetical."""
    frequencies = Counter(token for sentence in sentences for token in sentence)
    kept = [word for word, count in frequencies.items() if count >= min_count]
    return sorted(kept, key=lambda word: (-frequencies[word], word))


def cooccurrence_matrix(
    sentences: Iterable[Sequence[str]],
    vocabulary: Sequence[str],
    window: int,
) -> dict[tuple[int, int], float]:
    """Symmetric counts of word pairs at most `window` positions apart, keyed by row, col."""
    index = {word: i for i, word in enumerate(vocabulary)}
    counts: Counter[tuple[int, int]] = Counter()
    for sentence in sentences:
        ids = [index[token] for token in sentence if token in index]
        for position, center in enumerate(ids):
            for context in ids[position + 1 : position + 1 + window]:
                counts[(center, context)] += 1
                counts[(context, center)] += 1
    return {pair: float(count) for pair, count in sorted(counts.items())}


def _objective(
    pairs: _Cooccurrences,
    weights: npt.NDArray[np.float64],
    parameters: tuple[npt.NDArray[np.float64], ...],
) -> float:
    words, contexts, word_bias, context_bias = parameters
    predicted = np.einsum("ij,ij->i", words[pairs.rows], contexts[pairs.cols])
    predicted += word_bias[pairs.rows] + context_bias[pairs.cols]
    return float(0.5 * np.sum(weights * (predicted - np.log(pairs.counts)) ** 2))


def fit_glove(sentences: Iterable[Sequence[str]], config: TrainConfig) -> GloveFit:
    corpus = [list(sentence) for sentence in sentences]
    vocabulary = build_vocabulary(corpus, config.min_count)
    if len(vocabulary) < 2:
        msg = f"Training needs at least 2 vocabulary words, found {len(vocabulary)}."
        raise VocabularyTooSmallError(msg)
    matrix = cooccurrence_matrix(corpus, vocabulary, config.window)
    if not matrix:
        msg = f"No word pairs co-occur within a window of {config.window}."
        raise EmptyCooccurrenceError(msg)

    pairs = _Cooccurrences(
        rows=np.array([row for row, _ in matrix], dtype=np.int64),
        cols=np.array([col for _, col in matrix], dtype=np.int64),
        counts=np.array(list(matrix.values()), dtype=np.float64),
    )
    weights = np.minimum(1.0, (pairs.counts / config.x_max) ** WEIGHT_EXPONENT)
    log_counts = np.log(pairs.counts)

    rng = np.random.default_rng(config.seed)
    size, dim = len(vocabulary), config.dim
    words = (rng.random((size, dim)) - 0.5) / dim
    contexts = (rng.random((size, dim)) - 0.5) / dim
    word_bias = (rng.random(size) - 0.5) / dim
    context_bias = (rng.random(size) - 0.5) / dim
    # AdaGrad accumulators start at one.
    words_g2, contexts_g2 = np.ones_like(words), np.ones_like(contexts)
    word_bias_g2, context_bias_g2 = np.ones_like(word_bias), np.ones_like(context_bias)
    rate = config.learning_rate

    losses = []
    epochs = tqdm(
        range(config.iterations),
        desc="glove",
        unit=" epochs",
        disable=not sys.stderr.isatty(),
    )
    for _ in epochs:
        for k in rng.permutation(len(pairs.counts)):
            i, j = pairs.rows[k], pairs.cols[k]
            difference = words[i] @ contexts[j] + word_bias[i] + context_bias[j] - log_counts[k]
            scaled = weights[k] * difference
            grad_word = scaled * contexts[j]
            grad_context = scaled * words[i]

            words[i] -= rate * grad_word / np.sqrt(words_g2[i])
            contexts[j] -= rate * grad_context / np.sqrt(contexts_g2[j])
            word_bias[i] -= rate * scaled / np.sqrt(word_bias_g2[i])
            context_bias[j] -= rate * scaled / np.sqrt(context_bias_g2[j])

            words_g2[i] += grad_word**2
            contexts_g2[j] += grad_context**2
            word_bias_g2[i] += scaled**2
            context_bias_g2[j] += scaled**2
        losses.append(_objective(pairs, weights, (words, contexts, word_bias, context_bias)))
        logger.debug("GloVe epoch %d: loss %.6f", len(losses), losses[-1])

    logger.info(
        "Trained %d x %d vectors on %d co-occurring pairs, final loss %.4f.",
        size,
        dim,
        len(pairs.counts),
        losses[-1],
    )
    return GloveFit(table=EmbeddingTable(vocabulary, words + contexts), losses=losses)


def train_toy_embeddings(sentences: Iterable[Sequence[str]], config: TrainConfig) -> EmbeddingTable:
    """Word plus context vectors of a GloVe fit over tokenized reviews."""
    return fit_glove(sentences, config).table
