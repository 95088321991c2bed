import logging
from collections import defaultdict
from collections.abc import Mapping, Sequence
from itertools import combinations
from typing import NamedTuple

from errors import MetricInputError
from schemas.evaluation import AnnotationSet, GoldOrdering
from schemas.ranking import MethodId, RankedList

logger = logging.getLogger(__name__)


class Helpfulness(NamedTuple):
    rate: float | None
    helpful: int
    marks: int
    per_annotator: dict[str, float]
    gaps: list[tuple[str, str]]


def _ids(ranked: RankedList | Sequence[str]) -> list[str]:
    return ranked.review_ids if isinstance(ranked, RankedList) else list(ranked)


def top_n_rate(gold: Sequence[str], ranked: RankedList | Sequence[str], n: int) -> float:
    """Share of the gold top `n` that the ranking also places in its top `n`."""
    ranked_ids = _ids(ranked)
    if not 1 <= n <= min(len(gold), len(ranked_ids)):
        msg = f"n={n} is outside 1..{min(len(gold), len(ranked_ids))} for these lists."
        raise MetricInputError(msg)
    return len(set(gold[:n]) & set(ranked_ids[:n])) / n


def average_correct_rate(gold: Sequence[str], ranked: RankedList | Sequence[str]) -> float:
    """Fraction of review pairs the ranking orders the same way as the gold list."""
    ranked_ids = _ids(ranked)
    if set(gold) != set(ranked_ids) or len(gold) != len(ranked_ids):
        msg = "Gold and ranked lists must hold the same reviews exactly once."
        raise MetricInputError(msg)
    if len(gold) < 2:
        return 1.0
    position = {review_id: i for i, review_id in enumerate(ranked_ids)}
    pairs = list(combinations(gold, 2))
    concordant = sum(1 for before, after in pairs if position[before] < position[after])
    return concordant / len(pairs)


def helpfulness_rate(
    annotations: AnnotationSet,
    top1: Mapping[str, str],
    method: MethodId | str,
) -> Helpfulness:
    """Helpful marks over all marks given to the method's top-1 reviews.

    A top-1 review nobody marked is returned as a gap and left out of the denominator.
    """
    label = method.name if isinstance(method, MethodId) else method
    helpful = marks = 0
    by_annotator: dict[str, list[int]] = defaultdict(lambda: [0, 0])
    gaps = []
    for attribute, review_id in sorted(top1.items()):
        records = annotations.marks_for(attribute, review_id)
        if not records:
            gaps.append((attribute, review_id))
            logger.warning(
                "No marks for %s's top review %r of %r, left out of its rate.",
                label,
                review_id,
                attribute,
            )
            continue
        for record in records:
            counts = by_annotator[record.annotator]
            counts[0] += int(record.helpful)
            counts[1] += 1
            helpful += int(record.helpful)
            marks += 1
    per_annotator = {
        annotator: counts[0] / counts[1] for annotator, counts in sorted(by_annotator.items())
    }
    return Helpfulness(
        rate=helpful / marks if marks else None,
        helpful=helpful,
        marks=marks,
        per_annotator=per_annotator,
        gaps=gaps,
    )


def consensus_order(orderings: Sequence[GoldOrdering | Sequence[str]]) -> list[str]:
    """Borda count: sum of rank positions, reviews an annotator left out rank after their last."""
    lists = [
        ordering.review_ids if isinstance(ordering, GoldOrdering) else list(ordering)
        for ordering in orderings
    ]
    reviews = {review_id for ordering in lists for review_id in ordering}
    totals = dict.fromkeys(reviews, 0)
    for ordering in lists:
        position = {review_id: i for i, review_id in enumerate(ordering)}
        for review_id in reviews:
            totals[review_id] += position.get(review_id, len(ordering))
    return sorted(reviews, key=lambda review_id: (totals[review_id], review_id))
