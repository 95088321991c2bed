import argparse
from enum import StrEnum
from pathlib import Path

import synthetic
from schemas.configuration import PipelineConfig
from schemas.reviews import Review
from storage.lexicons import write_lexicon
from storage.vectors import write_table

from commands.common import Subparsers, positive_int, write_json


class Kind(StrEnum):
    LEXICON = "lexicon"
    ATTRIBUTE = "attribute"
    TWIN = "twin"


def register(subparsers: Subparsers) -> None:
    parser = subparsers.add_parser(
        "gen-synthetic",
        help="Write a generated corpus with known answers, for trying out the pipeline.",
    )
    parser.add_argument("--kind", type=Kind, choices=list(Kind), default=Kind.LEXICON)
    parser.add_argument(
        "--output",
        type=Path,
        help="Directory to write to, defaults to the directory of the reviews store.",
    )
    parser.add_argument("--size", type=positive_int, help="Number of reviews or sentences.")
    parser.add_argument("--seed", type=int)
    parser.set_defaults(handler=run)


def _write_reviews(path: Path, reviews: list[Review]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as review_file:
        review_file.writelines(line + "\n" for line in synthetic.review_lines(reviews))


def run(arguments: argparse.Namespace, configuration: PipelineConfig) -> None:
    stores = configuration.stores
    output = arguments.output or stores.reviews.path.parent
    seed = configuration.seed if arguments.seed is None else arguments.seed
    reviews_path = output / stores.reviews.file
    written = [reviews_path]
    summary: dict[str, object] = {"kind": arguments.kind.value}

    match arguments.kind:
        case Kind.LEXICON:
            size = arguments.size or 2000
            generated = synthetic.lexicon_corpus(seed=seed, size=size)
            reviews = generated.reviews
            seeds_path = output / stores.seeds.file
            write_lexicon(seeds_path, generated.seeds)
            written.append(seeds_path)
            summary["planted_negative"] = sorted(generated.planted_negative)
            summary["planted_positive"] = sorted(generated.planted_positive)
        case Kind.ATTRIBUTE:
            corpus = synthetic.attribute_corpus()
            reviews = corpus.reviews
            vectors_path = output / stores.vectors.file
            lexicon_path = output / stores.lexicon.file
            write_table(vectors_path, corpus.table)
            write_lexicon(lexicon_path, corpus.lexicon)
            written += [vectors_path, lexicon_path]
            summary["gold"] = corpus.gold
        case Kind.TWIN:
            sentences, twins = synthetic.twin_corpus(seed=seed, sentences=arguments.size or 1200)
            reviews = synthetic.sentence_reviews(sentences)
            summary["twins"] = twins

    _write_reviews(reviews_path, reviews)
    summary["reviews"] = len(reviews)
    summary["files"] = [str(path) for path in written]
    write_json(summary)
