from collections.abc import Callable, Iterator
from pathlib import Path

import pytest
from config import load_configuration, load_configuration_table
from corpus.ingest import Preprocessor
from main import main
from retrieval.ranker import Stores
from schemas.configuration import PipelineConfig
from storage.corpus import CorpusStore
from synthetic import AttributeCorpus, attribute_corpus

RESOURCES = Path(__file__).parent / "resources"


@pytest.fixture(autouse=True)
def _fresh_configuration_cache() -> Iterator[None]:
    load_configuration_table.cache_clear()
    yield
    load_configuration_table.cache_clear()


@pytest.fixture()
def default_configuration_file() -> Path:
    return Path(__file__).parent.parent / "src" / "config.toml"


@pytest.fixture()
def configuration_file(tmp_path: Path, default_configuration_file: Path) -> Path:
    """The shipped configuration with every store under `tmp_path`."""
    text = default_configuration_file.read_text(encoding="utf-8")
    text = text.replace('directory = "data"', f'directory = "{tmp_path.as_posix()}"')
    path = tmp_path / "config.toml"
    path.write_text(text, encoding="utf-8")
    return path


@pytest.fixture()
def configuration(configuration_file: Path) -> PipelineConfig:
    return load_configuration(configuration_file)


@pytest.fixture()
def preprocessor(configuration: PipelineConfig) -> Preprocessor:
    return Preprocessor.from_configuration(configuration)


@pytest.fixture()
def synthetic_attributes() -> AttributeCorpus:
    return attribute_corpus()


@pytest.fixture()
def attribute_stores(
    synthetic_attributes: AttributeCorpus,
    preprocessor: Preprocessor,
) -> Stores:
    return Stores(
        CorpusStore(synthetic_attributes.reviews),
        preprocessor,
        table=synthetic_attributes.table,
        lexicon=synthetic_attributes.lexicon,
    )


@pytest.fixture()
def reviews_file() -> Path:
    return RESOURCES / "reviews.jsonl"


@pytest.fixture()
def cli(configuration_file: Path) -> Callable[..., int]:
    """Run the command line against the temporary configuration."""

    def run(*arguments: str) -> int:
        return main(["--config", str(configuration_file), *arguments])

    return run


@pytest.fixture()
def seeded_configuration_file(configuration_file: Path) -> Path:
    """Read the seed words from the store directory instead of the shipped resources."""
    with configuration_file.open("a", encoding="utf-8") as toml_file:
        toml_file.write('\n[stores.seeds]\nfile = "seeds.tsv"\n')
    load_configuration_table.cache_clear()
    return configuration_file
