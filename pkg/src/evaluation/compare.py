import logging
from collections.abc import Sequence
from statistics import fmean

from errors import MetricInputError
from retrieval.ranker import Stores, order_reviews, rank
from schemas.evaluation import (
    AnnotationSet,
    CoverageGap,
    HelpfulnessCell,
    MetricReport,
    PoolEntry,
)
from schemas.ranking import MethodId

from evaluation.metrics import average_correct_rate, consensus_order, helpfulness_rate, top_n_rate

logger = logging.getLogger(__name__)

Top1 = dict[tuple[str, str], dict[str, str]]


def _categories(stores: Stores, categories: Sequence[str] | None) -> list[str]:
    return list(categories) if categories else stores.corpus.categories


def top_reviews(
    stores: Stores,
    attributes: Sequence[str],
    methods: Sequence[MethodId],
    categories: Sequence[str],
) -> Top1:
    """The top-1 review of every (method, category) for every attribute that has one."""
    found: Top1 = {}
    for method in methods:
        for category in categories:
            cell = found.setdefault((method.name, category), {})
            for attribute in attributes:
                ranked = rank(attribute, method, 1, stores, category)
                if ranked.entries:
                    cell[attribute] = ranked.entries[0].review_id
    return found


def annotation_pool(
    stores: Stores,
    attributes: Sequence[str],
    methods: Sequence[MethodId],
    categories: Sequence[str] | None = None,
    embedding_label: str = "GloVe",
) -> list[PoolEntry]:
    """Distinct top-1 reviews across methods; a review found by several methods is listed once."""
    labels = {method.name: method.label(embedding_label) for method in methods}
    found = top_reviews(stores, attributes, methods, _categories(stores, categories))
    pooled: dict[tuple[str, str, str], list[str]] = {}
    for (method_name, category), cell in found.items():
        for attribute, review_id in cell.items():
            pooled.setdefault((category, attribute, review_id), []).append(labels[method_name])
    return [
        PoolEntry(
            category=category,
            attribute=attribute,
            review_id=review_id,
            methods=method_labels,
            text=stores.corpus.get(review_id).raw_text,
        )
        for (category, attribute, review_id), method_labels in sorted(pooled.items())
    ]


def _ordering_metrics(
    stores: Stores,
    annotations: AnnotationSet,
    attributes: Sequence[str],
    method: MethodId,
    top_n: Sequence[int],
) -> tuple[dict[int, float], float | None]:
    by_cutoff: dict[int, list[float]] = {n: [] for n in top_n}
    concordance = []
    for attribute in attributes:
        if not (orderings := annotations.orderings_for(attribute)):
            continue
        gold = consensus_order(orderings)
        ranked = rank(attribute, method, max(top_n, default=1), stores)
        for n in top_n:
            try:
                by_cutoff[n].append(top_n_rate(gold, ranked, n))
            except MetricInputError:
                logger.debug("Skipping top-%d rate of %r: lists are too short.", n, attribute)
        ordered = order_reviews(attribute, method, gold, stores)
        concordance.append(average_correct_rate(gold, ordered))
    rates = {n: fmean(values) for n, values in by_cutoff.items() if values}
    return rates, fmean(concordance) if concordance else None


def compare_methods(
    stores: Stores,
    attributes: Sequence[str],
    methods: Sequence[MethodId],
    annotations: AnnotationSet,
    *,
    categories: Sequence[str] | None = None,
    top_n: Sequence[int] = (1, 3, 5, 10),
    embedding_label: str = "GloVe",
) -> MetricReport:
    if not attributes:
        msg = "Comparing methods needs at least one attribute."
        raise MetricInputError(msg)
    categories = _categories(stores, categories)
    labels = {method.name: method.label(embedding_label) for method in methods}
    found = top_reviews(stores, attributes, methods, categories)

    cells = []
    gaps = []
    for (method_name, category), top1 in found.items():
        result = helpfulness_rate(annotations, top1, labels[method_name])
        cells.append(
            HelpfulnessCell(
                method=labels[method_name],
                category=category,
                helpfulness_rate=result.rate,
                helpful=result.helpful,
                marks=result.marks,
                per_annotator=result.per_annotator,
                annotator_average=(
                    fmean(result.per_annotator.values()) if result.per_annotator else None
                ),
            ),
        )
        gaps += [
            CoverageGap(
                method=labels[method_name],
                category=category,
                attribute=attribute,
                review_id=review_id,
            )
            for attribute, review_id in result.gaps
        ]

    top_n_rates = {}
    correct_rates = {}
    for method in methods:
        rates, correct = _ordering_metrics(stores, annotations, attributes, method, top_n)
        if rates:
            top_n_rates[labels[method.name]] = rates
        correct_rates[labels[method.name]] = correct

    pool = {
        (category, attribute, review_id)
        for (_, category), top1 in found.items()
        for attribute, review_id in top1.items()
    }
    return MetricReport(
        methods=[labels[method.name] for method in methods],
        categories=categories,
        helpfulness=cells,
        top_n_rate=top_n_rates,
        average_correct_rate=correct_rates,
        coverage_gaps=gaps,
        pool_size=len(pool),
    )
