from __future__ import annotations

from enum import StrEnum

from pydantic import BaseModel, Field, model_validator


class Side(StrEnum):
    POSITIVE = "pos"
    NEGATIVE = "neg"

    @property
    def other(self) -> Side:
        return Side.NEGATIVE if self == Side.POSITIVE else Side.POSITIVE


class Origin(StrEnum):
    SEED = "seed"
    EXPANDED = "expanded"
    IMPORTED = "imported"


class Provenance(BaseModel):
    origin: Origin
    iteration: int = Field(default=0, ge=0)
    ratio_at_admission: float | None = Field(default=None, json_schema_extra={"example": 5.5})

    model_config = {"frozen": True}


class EmotionLexicon(BaseModel):
    positive: frozenset[str] = Field(default=frozenset())
    negative: frozenset[str] = Field(default=frozenset())
    provenance: dict[str, Provenance] = Field(default_factory=dict)

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _sides_are_disjoint(self) -> EmotionLexicon:
        if overlap := self.positive & self.negative:
            msg = f"Words on both sides: {', '.join(sorted(overlap))}"
            raise ValueError(msg)
        for word, record in self.provenance.items():
            if record.origin == Origin.EXPANDED and record.ratio_at_admission is None:
                msg = f"Expanded word {word!r} has no admission ratio."
                raise ValueError(msg)
        return self

    @classmethod
    def from_seeds(cls, positive: set[str], negative: set[str]) -> EmotionLexicon:
        words = positive | negative
        return cls(
            positive=frozenset(positive),
            negative=frozenset(negative),
            provenance={word: Provenance(origin=Origin.SEED) for word in words},
        )

    def words(self, side: Side) -> frozenset[str]:
        return self.positive if side == Side.POSITIVE else self.negative

    def side_of(self, word: str) -> Side | None:
        if word in self.positive:
            return Side.POSITIVE
        if word in self.negative:
            return Side.NEGATIVE
        return None

    def swapped(self) -> EmotionLexicon:
        """The same lexicon with the roles of the two sides exchanged."""
        return EmotionLexicon(
            positive=self.negative,
            negative=self.positive,
            provenance=self.provenance,
        )

    @property
    def size(self) -> int:
        return len(self.positive) + len(self.negative)
