from __future__ import annotations

from pydantic import BaseModel, Field, model_validator

NEGATIVE_SCORE = 1
POSITIVE_SCORE = 5


class Review(BaseModel):
    id_: str = Field(json_schema_extra={"example": "r-000123"}, alias="id", min_length=1)
    product_id: str = Field(json_schema_extra={"example": "100008348542"})
    category: str = Field(json_schema_extra={"example": "phone"})
    score: int = Field(ge=1, le=5, json_schema_extra={"example": 1})
    raw_text: str = Field(
        json_schema_extra={"example": "Battery died after two days, support never answered."},
        alias="text",
    )
    tokens: list[str] = Field(
        default_factory=list,
        json_schema_extra={"example": ["battery", "died", "two", "days", "support"]},
    )

    model_config = {"populate_by_name": True, "extra": "ignore"}

    @property
    def is_negative(self) -> bool:
        return self.score == NEGATIVE_SCORE

    @property
    def is_positive(self) -> bool:
        return self.score == POSITIVE_SCORE


class CorpusStats(BaseModel):
    total_ingested: int = Field(default=0, ge=0)
    kept: int = Field(default=0, ge=0, json_schema_extra={"description": "Negative reviews."})
    dropped_short: int = Field(default=0, ge=0)
    dropped_nonnegative: int = Field(default=0, ge=0)
    positive_kept: int = Field(
        default=0,
        ge=0,
        json_schema_extra={"description": "5-star reviews kept as lexicon context."},
    )
    malformed: int = Field(default=0, ge=0)
    duplicates: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _counts_add_up(self) -> CorpusStats:
        if self.total_ingested != self.kept + self.dropped_short + self.dropped_nonnegative:
            msg = "total_ingested must equal kept + dropped_short + dropped_nonnegative."
            raise ValueError(msg)
        if self.positive_kept > self.dropped_nonnegative:
            msg = "positive_kept is a subset of dropped_nonnegative."
            raise ValueError(msg)
        return self
