import argparse
import sys
from pathlib import Path
from typing import TextIO

from lexicon.induction import CandidateStats, Judge, Verdict, expand_lexicon
from schemas.configuration import PipelineConfig
from schemas.lexicon import EmotionLexicon, Origin, Side
from storage.corpus import read_corpus
from storage.lexicons import import_lexicon, read_seeds, read_word_list, write_lexicon

from commands.common import Subparsers, require_input, write_json

_VERBS = {verb.value[0]: verb for verb in Verdict} | {verb.value: verb for verb in Verdict}


def register(subparsers: Subparsers) -> None:
    parser = subparsers.add_parser(
        "lexicon",
        help="Expand the seed words into positive and negative emotion lexicons.",
    )
    parser.add_argument(
        "--interactive",
        action="store_true",
        help="Ask on stdin before admitting each candidate: accept, reject, defer or quit.",
    )
    parser.set_defaults(handler=run)

    importer = subparsers.add_parser(
        "import-lexicon",
        help="Build the lexicon store from plain positive and negative word lists.",
    )
    importer.add_argument("--positive", type=Path, required=True)
    importer.add_argument("--negative", type=Path, required=True)
    importer.set_defaults(handler=run_import)


def stdin_judge(source: TextIO | None = None, prompt: TextIO | None = None) -> Judge:
    """Read one verb per candidate from stdin; end of input counts as quit."""

    def judge(candidate: CandidateStats, side: Side, ratio: float) -> Verdict:
        answers = source or sys.stdin
        questions = prompt or sys.stderr
        while True:
            questions.write(
                f"{candidate.word} -> {side} (ratio {ratio:.2f}, "
                f"n_n={candidate.n_n}, n_p={candidate.n_p}) [a/r/d/q]: ",
            )
            questions.flush()
            if not (line := answers.readline()):
                return Verdict.QUIT
            if (verdict := _VERBS.get(line.strip().lower())) is not None:
                return verdict
            questions.write("Answer accept, reject, defer or quit.\n")

    return judge


def _report(path: Path, lexicon: EmotionLexicon) -> None:
    origins = [record.origin for record in lexicon.provenance.values()]
    write_json(
        {
            "path": str(path),
            "negative": len(lexicon.negative),
            "positive": len(lexicon.positive),
            "origins": {origin.value: origins.count(origin) for origin in Origin},
        },
    )


def run(arguments: argparse.Namespace, configuration: PipelineConfig) -> None:
    stores = configuration.stores
    corpus = read_corpus(require_input(stores.corpus.path, "ingest"))
    seeds = read_seeds(stores.seeds.path)
    reviews = [review.tokens for review in corpus.negative + corpus.positive]
    judge = stdin_judge() if arguments.interactive else None
    lexicon = expand_lexicon(reviews, seeds, configuration.lexicon, judge)
    write_lexicon(stores.lexicon.path, lexicon)
    _report(stores.lexicon.path, lexicon)


def run_import(arguments: argparse.Namespace, configuration: PipelineConfig) -> None:
    lexicon = import_lexicon(read_word_list(arguments.positive), read_word_list(arguments.negative))
    write_lexicon(configuration.stores.lexicon.path, lexicon)
    _report(configuration.stores.lexicon.path, lexicon)
