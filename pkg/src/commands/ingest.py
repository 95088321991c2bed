import argparse
from pathlib import Path

from corpus.ingest import ingest
from schemas.configuration import PipelineConfig

from commands.common import Subparsers, write_json


def register(subparsers: Subparsers) -> None:
    parser = subparsers.add_parser(
        "ingest",
        help="Clean, tokenize and filter raw reviews into the corpus store.",
    )
    parser.add_argument(
        "--input",
        type=Path,
        help="Raw review JSONL file, defaults to the configured reviews store.",
    )
    parser.add_argument(
        "--append",
        action="store_true",
        help="Add to the existing corpus store instead of replacing it.",
    )
    parser.set_defaults(handler=run)


def run(arguments: argparse.Namespace, configuration: PipelineConfig) -> None:
    source = arguments.input or configuration.stores.reviews.path
    write_json(ingest(source, configuration, append=arguments.append))
