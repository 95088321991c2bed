from __future__ import annotations

import logging
from pathlib import Path

from pydantic import BaseModel, Field, field_validator

from schemas.ranking import MethodId

RESOURCES = Path(__file__).parent.parent / "resources"


class StoreLocation(BaseModel):
    directory: Path = Field(default=Path("data"))
    file: str

    model_config = {"extra": "forbid"}

    @property
    def path(self) -> Path:
        return self.directory / self.file


class StoresConfig(BaseModel):
    reviews: StoreLocation = StoreLocation(file="reviews.jsonl")
    corpus: StoreLocation = StoreLocation(file="corpus.jsonl")
    lexicon: StoreLocation = StoreLocation(file="lexicon.tsv")
    vectors: StoreLocation = StoreLocation(file="vectors.txt")
    index: StoreLocation = StoreLocation(file="index.bin")
    annotations: StoreLocation = StoreLocation(file="annotations.csv")
    gold: StoreLocation = StoreLocation(file="gold.csv")
    pool: StoreLocation = StoreLocation(file="pool.csv")
    # Without a table of their own these fall back to the shipped resources.
    stopwords: StoreLocation = StoreLocation(directory=RESOURCES, file="stopwords.txt")
    seeds: StoreLocation = StoreLocation(directory=RESOURCES, file="seeds.tsv")

    model_config = {"extra": "forbid"}

    @property
    def stats(self) -> Path:
        """Sidecar of the corpus store."""
        corpus = self.corpus.path
        return corpus.with_name(f"{corpus.stem}.stats.json")


class CorpusConfig(BaseModel):
    tokenizer: str = Field(default="simple", json_schema_extra={"example": "jieba"})
    dictionary: Path | None = Field(
        default=None,
        json_schema_extra={"description": "User dictionary for dictionary-based segmenters."},
    )
    min_len: int = Field(default=5, ge=1)

    model_config = {"extra": "forbid"}


class ExpansionConfig(BaseModel):
    admit_threshold: float = Field(default=2.0, gt=0)
    stop_threshold: float = Field(default=1.2, gt=0)
    alpha: float = Field(default=1.0, ge=0)
    min_cooccurrence: int = Field(default=3, ge=0)
    max_iterations: int = Field(default=10, ge=0)

    model_config = {"extra": "forbid"}


class TrainingParameters(BaseModel):
    dim: int = Field(default=50, ge=1)
    window: int = Field(default=5, ge=0)
    iterations: int = Field(default=25, ge=1)
    learning_rate: float = Field(default=0.05, gt=0)
    x_max: float = Field(default=100.0, gt=0)
    min_count: int = Field(default=1, ge=1)

    model_config = {"extra": "forbid"}


class TrainConfig(TrainingParameters):
    seed: int = 42


class EmbeddingConfig(TrainingParameters):
    """The `[embedding]` table: training parameters plus the label used in reports."""

    label: str = Field(default="GloVe", json_schema_extra={"example": "word2vec"})

    def training(self, seed: int) -> TrainConfig:
        parameters = self.model_dump(include=set(TrainingParameters.model_fields))
        return TrainConfig(**parameters, seed=seed)


class RetrievalConfig(BaseModel):
    k1: float = Field(default=1.2, gt=0)
    b: float = Field(default=0.75, ge=0, le=1)
    method: str = "sigmoid"
    top_k: int = Field(default=10, ge=0)

    model_config = {"extra": "forbid"}

    @field_validator("method")
    @classmethod
    def _method_is_known(cls, method: str) -> str:
        MethodId.parse(method)
        return method


class EvaluationConfig(BaseModel):
    methods: list[str] = Field(
        default=["bm25", "none", "sigmoid", "isigmoid", "msigmoid", "imsigmoid"],
    )
    top_n: list[int] = Field(default=[1, 3, 5, 10])
    categories: list[str] | None = Field(
        default=None,
        json_schema_extra={"description": "Defaults to every category in the corpus."},
    )

    model_config = {"extra": "forbid"}

    @field_validator("methods")
    @classmethod
    def _methods_are_known(cls, methods: list[str]) -> list[str]:
        for method in methods:
            MethodId.parse(method)
        return methods

    @field_validator("top_n")
    @classmethod
    def _positive_cutoffs(cls, top_n: list[int]) -> list[int]:
        if any(n < 1 for n in top_n):
            msg = "top_n cutoffs must be at least 1"
            raise ValueError(msg)
        return sorted(set(top_n))


class LoggingConfig(BaseModel):
    level: str = "INFO"

    model_config = {"extra": "forbid"}

    @field_validator("level")
    @classmethod
    def _known_level(cls, level: str) -> str:
        if level.upper() not in logging.getLevelNamesMapping():
            msg = f"Unknown log level {level!r}."
            raise ValueError(msg)
        return level.upper()


class PipelineConfig(BaseModel):
    seed: int = 42
    stores: StoresConfig = StoresConfig()
    corpus: CorpusConfig = CorpusConfig()
    lexicon: ExpansionConfig = ExpansionConfig()
    embedding: EmbeddingConfig = EmbeddingConfig()
    retrieval: RetrievalConfig = RetrievalConfig()
    evaluation: EvaluationConfig = EvaluationConfig()
    logging: LoggingConfig = LoggingConfig()

    model_config = {"extra": "forbid"}
