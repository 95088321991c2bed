import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from commands import embeddings, evaluate, generate, index, ingest, lexicon, rank, reward
from config import load_configuration
from errors import ErrorCode, ExitCode, RevrankError, format_error

COMMANDS = (ingest, lexicon, embeddings, index, rank, evaluate, reward, generate)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revrank",
        description="Rank negative reviews by attribute similarity and emotion reward.",
    )
    parser.add_argument(
        "--config",
        type=Path,
        help="TOML configuration file, defaults to $REVRANK_CONFIG or the shipped config.toml.",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=list(logging.getLevelNamesMapping()),
        help="Overrides [logging] level.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def _fail(code: ExitCode, body: dict[str, str]) -> int:
    sys.stderr.write(json.dumps(body, ensure_ascii=False) + "\n")
    return code


def main(argv: Sequence[str] | None = None) -> int:
    arguments = build_parser().parse_args(argv)
    try:
        configuration = load_configuration(arguments.config)
        logging.basicConfig(
            level=arguments.log_level or configuration.logging.level,
            stream=sys.stderr,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )
        arguments.handler(arguments, configuration)
    except RevrankError as e:
        return _fail(e.exit_code, format_error(code=e.code, message=e.message))
    except UnicodeDecodeError as e:
        message = f"A store file is not utf-8 text: {e}"
        return _fail(ExitCode.IO, format_error(code=ErrorCode.STORE_FORMAT, message=message))
    except OSError as e:
        return _fail(ExitCode.IO, {"code": "io", "message": str(e)})
    return ExitCode.OK


if __name__ == "__main__":
    sys.exit(main())
