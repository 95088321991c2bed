import json
from collections.abc import Callable
from pathlib import Path

import pytest
from embedding.table import EmbeddingTable
from errors import ErrorCode, ExitCode
from retrieval.index import build_index
from schemas.configuration import PipelineConfig
from schemas.lexicon import EmotionLexicon
from schemas.reviews import Review
from storage.corpus import write_corpus
from storage.index import write_index
from storage.lexicons import write_lexicon
from storage.vectors import write_table

Cli = Callable[..., int]

ATTRIBUTES = ["battery", "screen", "price", "sound", "camera"]
ANNOTATORS = ["a1", "a2", "a3", "a4", "a5"]
# Helpful marks per attribute: 18 of 25 for the embedding pick, 16 of 25 for the BM25 pick.
EMBEDDING_HELPFUL = [5, 5, 5, 2, 1]
BM25_HELPFUL = [4, 4, 4, 2, 2]
TABLE = """\
Method         phone
BM25            0.64
GloVe_Sigmoid   0.72
"""


def _review(review_id: str, tokens: list[str]) -> Review:
    return Review(
        id_=review_id,
        product_id="p1",
        category="phone",
        score=1,
        raw_text=" ".join(tokens),
        tokens=tokens,
    )


@pytest.fixture()
def stores(configuration: PipelineConfig) -> PipelineConfig:
    """Per attribute, one review only BM25 picks and one only the embedding picks.

    The BM25 review names the attribute once among fillers; the embedding review
    never names it but is made of a synonym lying on the attribute's axis.
    """
    vectors = {"filler": [0.0] * 5 + [1.0]}
    reviews = []
    for i, attribute in enumerate(ATTRIBUTES):
        axis = [0.0] * 6
        axis[i] = 1.0
        vectors[attribute] = axis
        vectors[f"{attribute}ish"] = axis
        reviews.append(_review(f"bm-{attribute}", [attribute, *["filler"] * 4]))
        reviews.append(_review(f"em-{attribute}", [*[f"{attribute}ish"] * 3, "filler", "filler"]))

    paths = configuration.stores
    write_corpus(paths.corpus.path, reviews)
    write_index(paths.index.path, build_index(reviews))
    write_table(paths.vectors.path, EmbeddingTable.from_mapping(vectors))
    write_lexicon(paths.lexicon.path, EmotionLexicon.from_seeds({"lovely"}, {"awful"}))

    lines = ["attribute,annotator,review_id,helpful"]
    for attribute, embedding, bm25 in zip(ATTRIBUTES, EMBEDDING_HELPFUL, BM25_HELPFUL, strict=True):
        for j, annotator in enumerate(ANNOTATORS):
            lines.append(f"{attribute},{annotator},em-{attribute},{int(j < embedding)}")
            lines.append(f"{attribute},{annotator},bm-{attribute},{int(j < bm25)}")
    paths.annotations.path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return configuration


@pytest.mark.usefixtures("stores")
def test_helpfulness_table(cli: Cli, capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    table_file = tmp_path / "tables" / "table.txt"
    code = cli("evaluate", "--methods", "bm25,sigmoid", "--table", str(table_file))
    assert code == ExitCode.OK
    captured = capsys.readouterr()
    assert TABLE in captured.err
    assert TABLE == table_file.read_text(encoding="utf-8")

    report = json.loads(captured.out)
    assert ["BM25", "GloVe_Sigmoid"] == report["methods"]
    rates = {cell["method"]: cell["helpfulness_rate"] for cell in report["helpfulness"]}
    assert rates == pytest.approx({"BM25": 0.64, "GloVe_Sigmoid": 0.72})
    assert report["pool_size"] == 10
    assert report["coverage_gaps"] == []


@pytest.mark.usefixtures("stores")
def test_single_method(cli: Cli, capsys: pytest.CaptureFixture[str]) -> None:
    assert cli("evaluate", "--methods", "sigmoid") == ExitCode.OK
    err = capsys.readouterr().err
    assert "Method         phone\nGloVe_Sigmoid   0.72\n" in err
    assert "BM25" not in err


@pytest.mark.usefixtures("stores")
def test_attribute_selection(cli: Cli, capsys: pytest.CaptureFixture[str]) -> None:
    code = cli("evaluate", "--methods", "bm25", "--attributes", "sound,camera")
    assert code == ExitCode.OK
    report = json.loads(capsys.readouterr().out)
    assert report["helpfulness"][0]["helpfulness_rate"] == pytest.approx(0.4)


def test_without_annotations(
    cli: Cli,
    capsys: pytest.CaptureFixture[str],
    stores: PipelineConfig,
) -> None:
    stores.stores.annotations.path.unlink()
    assert cli("evaluate") == ExitCode.CONFIGURATION
    body = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert body["code"] == str(ErrorCode.CONFIGURATION)


def test_empty_annotation_file(
    cli: Cli,
    stores: PipelineConfig,
) -> None:
    path = stores.stores.annotations.path
    path.write_text("attribute,annotator,review_id,helpful\n", encoding="utf-8")
    assert cli("evaluate") == ExitCode.CONFIGURATION


def test_pool(cli: Cli, capsys: pytest.CaptureFixture[str], stores: PipelineConfig) -> None:
    code = cli("pool", "--methods", "bm25,sigmoid", "--attributes", "battery,screen")
    assert code == ExitCode.OK
    assert json.loads(capsys.readouterr().out)["pool_size"] == 4
    rows = stores.stores.pool.path.read_text(encoding="utf-8").splitlines()
    assert rows[1] == "phone,battery,bm-battery,BM25,battery filler filler filler filler"
    assert rows[2] == (
        "phone,battery,em-battery,GloVe_Sigmoid,batteryish batteryish batteryish filler filler"
    )


def test_pool_needs_attributes(cli: Cli) -> None:
    assert cli("pool") == ExitCode.CONFIGURATION
