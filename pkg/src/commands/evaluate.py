import argparse
import logging
import sys
from pathlib import Path

from errors import ConfigurationError
from evaluation.compare import annotation_pool, compare_methods
from evaluation.report import render_report
from retrieval.ranker import Stores
from schemas.configuration import PipelineConfig
from schemas.ranking import MethodId
from storage.annotations import read_annotations, write_pool

from commands.common import Subparsers, method_list_argument, write_json

logger = logging.getLogger(__name__)


def _add_selection_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--methods",
        type=method_list_argument,
        help="Comma-separated methods, defaults to the configured list.",
    )
    parser.add_argument(
        "--attributes",
        help="Comma-separated attributes, defaults to those in the annotation file.",
    )
    parser.add_argument(
        "--categories",
        help="Comma-separated product categories, defaults to all in the corpus.",
    )


def register(subparsers: Subparsers) -> None:
    evaluate = subparsers.add_parser(
        "evaluate",
        help="Compare methods against annotations: helpfulness, top-n and correct rates.",
    )
    _add_selection_arguments(evaluate)
    evaluate.add_argument("--table", type=Path, help="Also write the text table to this file.")
    evaluate.set_defaults(handler=run)

    pool = subparsers.add_parser(
        "pool",
        help="Write the deduplicated sheet of top-1 reviews for annotators.",
    )
    _add_selection_arguments(pool)
    pool.set_defaults(handler=run_pool)


def _split(value: str | None) -> list[str] | None:
    if value is None:
        return None
    return [item.strip() for item in value.split(",") if item.strip()]


def _methods(arguments: argparse.Namespace, configuration: PipelineConfig) -> list[MethodId]:
    if arguments.methods:
        return list(arguments.methods)
    return [MethodId.parse(name) for name in configuration.evaluation.methods]


def run(arguments: argparse.Namespace, configuration: PipelineConfig) -> None:
    stores_config = configuration.stores
    if not stores_config.annotations.path.is_file():
        msg = f"Evaluation needs annotations, {stores_config.annotations.path} does not exist."
        raise ConfigurationError(msg)
    annotations = read_annotations(stores_config.annotations.path, stores_config.gold.path)
    attributes = _split(arguments.attributes) or annotations.attributes
    if not annotations.records or not attributes:
        msg = f"{stores_config.annotations.path} holds no annotations."
        raise ConfigurationError(msg)

    methods = _methods(arguments, configuration)
    report = compare_methods(
        Stores.load(configuration, methods),
        attributes,
        methods,
        annotations,
        categories=_split(arguments.categories) or configuration.evaluation.categories,
        top_n=configuration.evaluation.top_n,
        embedding_label=configuration.embedding.label,
    )
    table = render_report(report)
    sys.stderr.write(table)
    if arguments.table:
        arguments.table.parent.mkdir(parents=True, exist_ok=True)
        arguments.table.write_text(table, encoding="utf-8")
    write_json(report)


def run_pool(arguments: argparse.Namespace, configuration: PipelineConfig) -> None:
    if not (attributes := _split(arguments.attributes)):
        msg = "The annotation pool needs --attributes."
        raise ConfigurationError(msg)
    methods = _methods(arguments, configuration)
    entries = annotation_pool(
        Stores.load(configuration, methods),
        attributes,
        methods,
        _split(arguments.categories) or configuration.evaluation.categories,
        configuration.embedding.label,
    )
    path = configuration.stores.pool.path
    write_pool(path, entries)
    logger.info("Wrote %d reviews to annotate to %s.", len(entries), path)
    write_json({"path": str(path), "pool_size": len(entries)})
