"""Pieces shared by the command modules: stdout writers and argument types."""
import argparse
import json
import sys
from collections.abc import Callable, Iterable
from pathlib import Path
from typing import Any, TypeAlias

from errors import StoreMissingError
from pydantic import BaseModel
from schemas.configuration import PipelineConfig
from schemas.ranking import MethodId

Subparsers: TypeAlias = "argparse._SubParsersAction[argparse.ArgumentParser]"
Handler = Callable[[argparse.Namespace, PipelineConfig], None]


def write_json(value: BaseModel | dict[str, Any] | list[Any]) -> None:
    """The one JSON document a command puts on stdout."""
    if isinstance(value, BaseModel):
        sys.stdout.write(value.model_dump_json(indent=2) + "\n")
        return
    sys.stdout.write(json.dumps(value, indent=2, ensure_ascii=False) + "\n")


def write_jsonl(rows: Iterable[dict[str, Any]]) -> None:
    for row in rows:
        sys.stdout.write(json.dumps(row, ensure_ascii=False) + "\n")


def require_input(path: Path, produced_by: str) -> Path:
    if not path.is_file():
        msg = f"{path} does not exist, run `{produced_by}` first."
        raise StoreMissingError(msg)
    return path


def method_argument(name: str) -> MethodId:
    try:
        return MethodId.parse(name)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def method_list_argument(names: str) -> list[MethodId]:
    """Comma-separated method names."""
    return [method_argument(name) for name in names.split(",") if name.strip()]


def non_negative_int(value: str) -> int:
    number = int(value)
    if number < 0:
        msg = f"{value} is negative"
        raise argparse.ArgumentTypeError(msg)
    return number


def positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        msg = f"{value} is not a positive integer"
        raise argparse.ArgumentTypeError(msg)
    return number
