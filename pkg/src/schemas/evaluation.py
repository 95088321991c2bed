from __future__ import annotations

from pydantic import BaseModel, Field, model_validator


class Annotation(BaseModel):
    attribute: str = Field(json_schema_extra={"example": "battery"})
    annotator: str = Field(json_schema_extra={"example": "expert-1"})
    review_id: str
    helpful: bool

    model_config = {"frozen": True}


class GoldOrdering(BaseModel):
    attribute: str
    annotator: str
    review_ids: list[str]

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _no_duplicates(self) -> GoldOrdering:
        if len(set(self.review_ids)) != len(self.review_ids):
            msg = f"Gold ordering of {self.annotator!r} for {self.attribute!r} repeats a review."
            raise ValueError(msg)
        return self


class AnnotationSet(BaseModel):
    records: list[Annotation] = Field(default_factory=list)
    orderings: list[GoldOrdering] = Field(default_factory=list)

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _unique_marks(self) -> AnnotationSet:
        seen: set[tuple[str, str, str]] = set()
        for record in self.records:
            key = (record.attribute, record.annotator, record.review_id)
            if key in seen:
                msg = f"Duplicate annotation for {key}."
                raise ValueError(msg)
            seen.add(key)
        return self

    @property
    def attributes(self) -> list[str]:
        found = {record.attribute for record in self.records}
        found |= {ordering.attribute for ordering in self.orderings}
        return sorted(found)

    def marks_for(self, attribute: str, review_id: str) -> list[Annotation]:
        return [
            record
            for record in self.records
            if record.attribute == attribute and record.review_id == review_id
        ]

    def orderings_for(self, attribute: str) -> list[GoldOrdering]:
        return [ordering for ordering in self.orderings if ordering.attribute == attribute]


class CoverageGap(BaseModel):
    method: str
    category: str | None
    attribute: str
    review_id: str


class HelpfulnessCell(BaseModel):
    method: str = Field(json_schema_extra={"example": "GloVe_Sigmoid"})
    category: str = Field(json_schema_extra={"example": "phone"})
    helpfulness_rate: float | None = Field(default=None, ge=0, le=1)
    helpful: int = Field(default=0, ge=0)
    marks: int = Field(default=0, ge=0)
    per_annotator: dict[str, float] = Field(default_factory=dict)
    annotator_average: float | None = Field(
        default=None,
        ge=0,
        le=1,
        json_schema_extra={"description": "Unweighted mean of the per-annotator rates."},
    )


class MetricReport(BaseModel):
    methods: list[str] = Field(default_factory=list)
    categories: list[str] = Field(default_factory=list)
    helpfulness: list[HelpfulnessCell] = Field(default_factory=list)
    top_n_rate: dict[str, dict[int, float]] = Field(default_factory=dict)
    average_correct_rate: dict[str, float | None] = Field(default_factory=dict)
    coverage_gaps: list[CoverageGap] = Field(default_factory=list)
    pool_size: int = Field(
        default=0,
        json_schema_extra={"description": "Distinct (attribute, review) pairs to annotate."},
    )

    @model_validator(mode="after")
    def _rates_in_unit_interval(self) -> MetricReport:
        rates = [rate for rates in self.top_n_rate.values() for rate in rates.values()]
        rates += [rate for rate in self.average_correct_rate.values() if rate is not None]
        if any(not 0.0 <= rate <= 1.0 for rate in rates):
            msg = "All rates must lie in [0, 1]."
            raise ValueError(msg)
        return self

    def cell(self, method: str, category: str) -> HelpfulnessCell | None:
        for cell in self.helpfulness:
            if cell.method == method and cell.category == category:
                return cell
        return None


class PoolEntry(BaseModel):
    """One review to annotate, with the methods that retrieved it as their top 1."""

    category: str
    attribute: str
    review_id: str
    methods: list[str] = Field(json_schema_extra={"example": ["BM25", "GloVe_Sigmoid"]})
    text: str = ""
