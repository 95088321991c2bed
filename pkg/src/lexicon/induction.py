"""Recursive seed expansion of the positive and negative emotion lexicons.

Each iteration counts how often every non-seed word shares a review with the
current negative and positive seeds, ranks the candidates by their ratio of
the two counts, and admits the strongly one-sided ones as new seeds.
"""
import logging
import math
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from enum import StrEnum
from typing import NamedTuple

from errors import (
    ConfigurationError,
    EmptyCorpusError,
    OverlappingSeedsError,
    UndefinedRatioError,
)
from schemas.configuration import ExpansionConfig
from schemas.lexicon import EmotionLexicon, Origin, Provenance, Side

logger = logging.getLogger(__name__)


class CandidateStats(NamedTuple):
    word: str
    n_n: int
    n_p: int


class Verdict(StrEnum):
    ACCEPT = "accept"
    REJECT = "reject"
    DEFER = "defer"
    QUIT = "quit"


# Called with the candidate, the side it is proposed for and its ratio on that side.
Judge = Callable[[CandidateStats, Side, float], Verdict]


def _ratio(numerator: int, denominator: int, alpha: float) -> float:
    if alpha < 0:
        msg = f"Smoothing alpha must be non-negative, got {alpha}."
        raise ValueError(msg)
    if alpha == 0 and denominator == 0:
        msg = "Ratio is undefined: no co-occurrence on the opposite side and no smoothing."
        raise UndefinedRatioError(msg)
    return (numerator + alpha) / (denominator + alpha)


def negative_ratio(stats: CandidateStats, alpha: float) -> float:
    return _ratio(stats.n_n, stats.n_p, alpha)


def positive_ratio(stats: CandidateStats, alpha: float) -> float:
    return _ratio(stats.n_p, stats.n_n, alpha)


def side_ratio(stats: CandidateStats, side: Side, alpha: float) -> float:
    return negative_ratio(stats, alpha) if side == Side.NEGATIVE else positive_ratio(stats, alpha)


def _admission_ratio(stats: CandidateStats, side: Side, alpha: float) -> float:
    try:
        return side_ratio(stats, side, alpha)
    except UndefinedRatioError:
        return math.inf


def count_cooccurrences(
    reviews: Iterable[Sequence[str]],
    negative: frozenset[str],
    positive: frozenset[str],
) -> dict[str, CandidateStats]:
    """Review-level co-occurrence of every non-seed word with each seed side.

    A word gains, per review it appears in, the number of distinct seeds of a
    side present in that review. Counts over disjoint shards add up.
    """
    n_n: Counter[str] = Counter()
    n_p: Counter[str] = Counter()
    seeds = negative | positive
    for tokens in reviews:
        types = set(tokens)
        negative_hits = len(types & negative)
        positive_hits = len(types & positive)
        for word in types - seeds:
            n_n[word] += negative_hits
            n_p[word] += positive_hits
    return {word: CandidateStats(word, n_n[word], n_p[word]) for word in sorted(n_n.keys())}


def _check_inputs(reviews: list[list[str]], seeds: EmotionLexicon) -> None:
    if not reviews:
        msg = "Cannot expand a lexicon over an empty corpus."
        raise EmptyCorpusError(msg)
    if not seeds.positive or not seeds.negative:
        msg = "Seed lexicon needs at least one word on each side."
        raise ConfigurationError(msg)
    if overlap := seeds.positive & seeds.negative:
        msg = f"Seed words on both sides: {', '.join(sorted(overlap))}"
        raise OverlappingSeedsError(msg)


def expand_lexicon(
    reviews: Iterable[Sequence[str]],
    seeds: EmotionLexicon,
    config: ExpansionConfig,
    judge: Judge | None = None,
) -> EmotionLexicon:
    """Grow `seeds` over the token lists of a corpus's 1-star and 5-star reviews.

    Without a `judge` every candidate at or above `admit_threshold` is admitted;
    with one, the same candidates are put to the judge in descending ratio order.
    """
    corpus = [list(tokens) for tokens in reviews]
    _check_inputs(corpus, seeds)

    words = {Side.NEGATIVE: set(seeds.negative), Side.POSITIVE: set(seeds.positive)}
    provenance = dict(seeds.provenance)
    for word in seeds.positive | seeds.negative:
        provenance.setdefault(word, Provenance(origin=Origin.SEED))
    # Candidates judged and turned down for a side are never put to that side again.
    not_seed: dict[Side, set[str]] = {Side.NEGATIVE: set(), Side.POSITIVE: set()}

    for iteration in range(1, config.max_iterations + 1):
        stats = count_cooccurrences(
            corpus,
            frozenset(words[Side.NEGATIVE]),
            frozenset(words[Side.POSITIVE]),
        )
        supported = [
            candidate
            for candidate in stats.values()
            if candidate.n_n + candidate.n_p >= max(config.min_cooccurrence, 1)
        ]
        live = False
        admitted = 0
        stopped = False
        for side in (Side.NEGATIVE, Side.POSITIVE):
            ranked = sorted(
                (
                    (_admission_ratio(candidate, side, config.alpha), candidate)
                    for candidate in supported
                    if candidate.word not in words[Side.NEGATIVE]
                    and candidate.word not in words[Side.POSITIVE]
                    and candidate.word not in not_seed[side]
                ),
                key=lambda pair: (-pair[0], pair[1].word),
            )
            live |= any(ratio >= config.stop_threshold for ratio, _ in ranked)
            for ratio, candidate in ranked:
                if ratio < config.admit_threshold:
                    break
                verdict = judge(candidate, side, ratio) if judge else Verdict.ACCEPT
                if verdict == Verdict.QUIT:
                    stopped = True
                    break
                if verdict == Verdict.ACCEPT:
                    words[side].add(candidate.word)
                    provenance[candidate.word] = Provenance(
                        origin=Origin.EXPANDED,
                        iteration=iteration,
                        ratio_at_admission=ratio,
                    )
                    admitted += 1
                else:
                    not_seed[side].add(candidate.word)
            if stopped:
                break

        logger.info(
            "Expansion iteration %d: admitted %d, lexicon now %d negative / %d positive.",
            iteration,
            admitted,
            len(words[Side.NEGATIVE]),
            len(words[Side.POSITIVE]),
        )
        if stopped or not live or admitted == 0:
            break

    return EmotionLexicon(
        positive=frozenset(words[Side.POSITIVE]),
        negative=frozenset(words[Side.NEGATIVE]),
        provenance=provenance,
    )
