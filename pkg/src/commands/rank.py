import argparse

from retrieval.ranker import Stores, rank
from schemas.configuration import PipelineConfig
from schemas.ranking import MethodId

from commands.common import Subparsers, method_argument, non_negative_int, write_jsonl


def register(subparsers: Subparsers) -> None:
    parser = subparsers.add_parser(
        "rank",
        help="Rank the negative reviews for an attribute and print them as JSONL.",
    )
    parser.add_argument("--attribute", required=True, help="Topic word or phrase.")
    parser.add_argument(
        "--method",
        type=method_argument,
        help="bm25, embed, or a reward variant (sigmoid, isigmoid, msigmoid, imsigmoid, none).",
    )
    parser.add_argument("--top", type=non_negative_int, help="Number of reviews to return.")
    parser.add_argument("--category", help="Only rank reviews of this product category.")
    parser.set_defaults(handler=run)


def run(arguments: argparse.Namespace, configuration: PipelineConfig) -> None:
    retrieval = configuration.retrieval
    method = arguments.method or MethodId.parse(retrieval.method)
    top = retrieval.top_k if arguments.top is None else arguments.top
    stores = Stores.load(configuration, [method])
    write_jsonl(rank(arguments.attribute, method, top, stores, arguments.category).records())
