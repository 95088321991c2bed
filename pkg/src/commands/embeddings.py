import argparse

from embedding.glove import fit_glove
from embedding.similarity import most_similar
from schemas.configuration import PipelineConfig
from storage.corpus import read_corpus
from storage.vectors import load_table, write_table

from commands.common import (
    Subparsers,
    non_negative_int,
    positive_int,
    require_input,
    write_json,
)


def register(subparsers: Subparsers) -> None:
    trainer = subparsers.add_parser(
        "train-embeddings",
        help="Fit small GloVe vectors on the negative reviews and write the vector store.",
    )
    trainer.add_argument("--dim", type=positive_int)
    trainer.add_argument("--iterations", type=positive_int)
    trainer.add_argument("--window", type=non_negative_int)
    trainer.add_argument("--seed", type=int)
    trainer.set_defaults(handler=run_train)

    loader = subparsers.add_parser(
        "load-embeddings",
        help="Check that the vector store parses and report its shape.",
    )
    loader.add_argument(
        "--neighbours",
        metavar="WORD",
        action="append",
        default=[],
        help="Also list the nearest words to WORD, may be repeated.",
    )
    loader.add_argument("--top", type=positive_int, default=10)
    loader.set_defaults(handler=run_load)


def run_train(arguments: argparse.Namespace, configuration: PipelineConfig) -> None:
    overrides = {
        field: value
        for field in ("dim", "iterations", "window")
        if (value := getattr(arguments, field)) is not None
    }
    embedding = configuration.embedding.model_copy(update=overrides)
    seed = configuration.seed if arguments.seed is None else arguments.seed
    stores = configuration.stores
    corpus = read_corpus(require_input(stores.corpus.path, "ingest"))
    corpus.require_nonempty()
    fit = fit_glove((review.tokens for review in corpus.negative), embedding.training(seed))
    write_table(stores.vectors.path, fit.table)
    write_json(
        {
            "path": str(stores.vectors.path),
            "vocab_size": fit.table.vocab_size,
            "dim": fit.table.dim,
            "losses": fit.losses,
        },
    )


def run_load(arguments: argparse.Namespace, configuration: PipelineConfig) -> None:
    path = configuration.stores.vectors.path
    table = load_table(path)
    neighbours = {
        word: [
            {"word": other, "cosine": similarity}
            for other, similarity in most_similar(word, table, arguments.top)
        ]
        for word in arguments.neighbours
    }
    write_json(
        {
            "path": str(path),
            "vocab_size": table.vocab_size,
            "dim": table.dim,
            "neighbours": neighbours,
        },
    )
