import functools
import os
import tomllib
import typing
from pathlib import Path

from dotenv import load_dotenv
from errors import ConfigurationError
from pydantic import ValidationError
from schemas.configuration import PipelineConfig

TomlTable = dict[str, typing.Any]

DEFAULT_CONFIGURATION_FILE = Path(__file__).parent / "config.toml"


def _apply_defaults_to_siblings(configuration: TomlTable) -> TomlTable:
    defaults = configuration.get("defaults", {})
    return {
        subtable: (defaults | overrides) if isinstance(overrides, dict) else overrides
        for subtable, overrides in configuration.items()
        if subtable != "defaults"
    }


def configuration_file(file: Path | None = None) -> Path:
    """Resolve the configuration file: explicit path, `REVRANK_CONFIG`, shipped default."""
    if file is not None:
        return file
    load_dotenv()
    if from_environment := os.environ.get("REVRANK_CONFIG"):
        return Path(from_environment)
    return DEFAULT_CONFIGURATION_FILE


@functools.cache
def load_configuration_table(file: Path = DEFAULT_CONFIGURATION_FILE) -> TomlTable:
    try:
        configuration = tomllib.loads(file.read_text(encoding="utf-8"))
    except tomllib.TOMLDecodeError as e:
        msg = f"Configuration file {file} is not valid TOML: {e}"
        raise ConfigurationError(msg) from None

    stores = configuration.get("stores", {})
    load_dotenv()
    if directory := os.environ.get("REVRANK_STORES_DIRECTORY"):
        stores.setdefault("defaults", {})["directory"] = directory
    configuration["stores"] = _apply_defaults_to_siblings(stores)
    return configuration


def load_configuration(file: Path | None = None) -> PipelineConfig:
    path = configuration_file(file)
    if not path.is_file():
        msg = f"Configuration file {path} does not exist."
        raise ConfigurationError(msg)
    try:
        return PipelineConfig.model_validate(load_configuration_table(path))
    except ValidationError as e:
        msg = f"Invalid configuration in {path}: {e}"
        raise ConfigurationError(msg) from None
