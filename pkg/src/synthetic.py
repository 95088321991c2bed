"""Generated corpora with known answers, for `gen-synthetic` and the tests.

- `lexicon_corpus`: 1-star and 5-star reviews where planted words only ever
  appear next to seeds of one side.
- `attribute_corpus`: one review per attribute that matches it exactly in a
  hand-made vector space, among distractors that only mention it.
- `twin_corpus`: sentences where pairs of words share every context but never
  each other, for checking the embedding trainer.
"""
from collections.abc import Iterator
from typing import NamedTuple

import numpy as np
from embedding.table import EmbeddingTable, Vector
from schemas.lexicon import EmotionLexicon
from schemas.reviews import NEGATIVE_SCORE, POSITIVE_SCORE, Review

ATTRIBUTES = (
    "battery",
    "screen",
    "logistics",
    "packaging",
    "price",
    "service",
    "sound",
    "camera",
    "charger",
    "keyboard",
)
CATEGORIES = ("phone", "laptop")


class LexiconCorpus(NamedTuple):
    reviews: list[Review]
    seeds: EmotionLexicon
    planted_negative: frozenset[str]
    planted_positive: frozenset[str]


class AttributeCorpus(NamedTuple):
    reviews: list[Review]
    table: EmbeddingTable
    lexicon: EmotionLexicon
    attributes: list[str]
    gold: dict[str, str]


def _review(review_id: str, category: str, score: int, tokens: list[str]) -> Review:
    return Review(
        id_=review_id,
        product_id=f"{category}-{review_id}",
        category=category,
        score=score,
        raw_text=" ".join(tokens),
        tokens=tokens,
    )


def lexicon_corpus(
    seed: int = 42,
    size: int = 2000,
    seeds_per_side: int = 10,
    planted_per_side: int = 20,
    fillers: int = 50,
) -> LexiconCorpus:
    """Half 1-star, half 5-star reviews of two seeds, two planted words and three fillers."""
    rng = np.random.default_rng(seed)
    negative_seeds = [f"negseed{i:02d}" for i in range(seeds_per_side)]
    positive_seeds = [f"posseed{i:02d}" for i in range(seeds_per_side)]
    negative_planted = [f"negword{i:02d}" for i in range(planted_per_side)]
    positive_planted = [f"posword{i:02d}" for i in range(planted_per_side)]
    filler_words = [f"filler{i:02d}" for i in range(fillers)]

    reviews = []
    for i in range(size):
        negative = i % 2 == 0
        side_seeds, side_planted = (
            (negative_seeds, negative_planted) if negative else (positive_seeds, positive_planted)
        )
        tokens = [
            *rng.choice(side_seeds, size=2, replace=False),
            *rng.choice(side_planted, size=2, replace=False),
            *rng.choice(filler_words, size=3, replace=False),
        ]
        rng.shuffle(tokens)
        reviews.append(
            _review(
                f"lx{i:05d}",
                CATEGORIES[(i // 2) % len(CATEGORIES)],
                NEGATIVE_SCORE if negative else POSITIVE_SCORE,
                [str(token) for token in tokens],
            ),
        )
    return LexiconCorpus(
        reviews=reviews,
        seeds=EmotionLexicon.from_seeds(set(positive_seeds), set(negative_seeds)),
        planted_negative=frozenset(negative_planted),
        planted_positive=frozenset(positive_planted),
    )


def attribute_corpus(attributes: int = 10, synonyms: int = 5) -> AttributeCorpus:
    """Gold-by-construction ranking corpus with its own vector table and lexicon.

    Each attribute owns one axis. Its gold review is made of synonyms lying on
    that axis, so its similarity is 1 and it carries no emotion words. Each
    distractor names the attribute once next to two fillers and two emotion
    words that share a second and third axis, giving a similarity of 1/3.
    """
    names = list(ATTRIBUTES[:attributes])
    filler_axis, emotion_axis = len(names), len(names) + 1
    dim = len(names) + 2
    vectors: dict[str, Vector] = {}

    def axis(index: int) -> Vector:
        vector = np.zeros(dim)
        vector[index] = 1.0
        return vector

    vectors["filler"] = axis(filler_axis)
    vectors["awful"] = axis(emotion_axis)
    vectors["lovely"] = axis(emotion_axis)

    reviews = []
    gold = {}
    distractor_emotions = (["awful", "awful"], ["lovely", "lovely"], ["awful", "lovely"])
    for i, name in enumerate(names):
        category = CATEGORIES[i % len(CATEGORIES)]
        vectors[name] = axis(i)
        synonym_words = [f"{name}{j}" for j in range(synonyms)]
        for word in synonym_words:
            vectors[word] = axis(i)
        gold[name] = f"{name}-gold"
        reviews.append(_review(gold[name], category, NEGATIVE_SCORE, synonym_words))
        for j, emotions in enumerate(distractor_emotions):
            tokens = [name, "filler", "filler", *emotions]
            reviews.append(_review(f"{name}-d{j}", category, NEGATIVE_SCORE, tokens))

    words = sorted(vectors)
    return AttributeCorpus(
        reviews=reviews,
        table=EmbeddingTable(words, [vectors[word] for word in words]),
        lexicon=EmotionLexicon.from_seeds({"lovely"}, {"awful"}),
        attributes=names,
        gold=gold,
    )


def twin_corpus(
    seed: int = 42,
    topics: int = 6,
    contexts_per_topic: int = 8,
    sentences: int = 1200,
) -> tuple[list[list[str]], list[tuple[str, str]]]:
    """Sentences of one twin word and four topic context words; twins never meet.

    Returns the sentences and the planted twin pairs.
    """
    rng = np.random.default_rng(seed)
    twins = [(f"twin{k}a", f"twin{k}b") for k in range(topics)]
    contexts = [[f"ctx{k}w{j}" for j in range(contexts_per_topic)] for k in range(topics)]
    corpus = []
    for _ in range(sentences):
        topic = int(rng.integers(topics))
        twin = twins[topic][int(rng.integers(2))]
        words = [twin, *rng.choice(contexts[topic], size=4, replace=False)]
        rng.shuffle(words)
        corpus.append([str(word) for word in words])
    return corpus, twins


def review_lines(reviews: list[Review]) -> Iterator[str]:
    """Raw-review JSONL lines, the input format of `ingest`."""
    for review in reviews:
        yield review.model_dump_json(by_alias=True, exclude={"tokens"})


def sentence_reviews(sentences: list[list[str]], category: str = CATEGORIES[0]) -> list[Review]:
    """Wrap token lists as 1-star reviews so they can go through `ingest`."""
    return [
        _review(f"s{i:05d}", category, NEGATIVE_SCORE, tokens) for i, tokens in enumerate(sentences)
    ]
