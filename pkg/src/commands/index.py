import argparse

from retrieval.index import build_index
from schemas.configuration import PipelineConfig
from storage.corpus import read_corpus
from storage.index import write_index

from commands.common import Subparsers, require_input, write_json


def register(subparsers: Subparsers) -> None:
    parser = subparsers.add_parser(
        "index",
        help="Build the BM25 inverted index over the negative reviews.",
    )
    parser.set_defaults(handler=run)


def run(_: argparse.Namespace, configuration: PipelineConfig) -> None:
    stores = configuration.stores
    index = build_index(read_corpus(require_input(stores.corpus.path, "ingest")))
    write_index(stores.index.path, index)
    write_json(
        {
            "path": str(stores.index.path),
            "doc_count": index.doc_count,
            "terms": len(index.postings),
            "avg_doc_len": index.avg_doc_len,
        },
    )
