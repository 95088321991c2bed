from __future__ import annotations

from enum import StrEnum
from typing import Any

from pydantic import BaseModel, Field, model_validator

from reward import RewardVariant


class MethodKind(StrEnum):
    BM25 = "bm25"
    EMBED = "embed"


class MethodId(BaseModel):
    kind: MethodKind
    variant: RewardVariant | None = None

    model_config = {"frozen": True, "extra": "forbid"}

    @model_validator(mode="after")
    def _variant_only_for_embed(self) -> MethodId:
        if self.kind == MethodKind.BM25 and self.variant is not None:
            msg = "BM25 takes no reward variant."
            raise ValueError(msg)
        if self.kind == MethodKind.EMBED and self.variant is None:
            msg = "Embedding methods need a reward variant (use 'none' for plain similarity)."
            raise ValueError(msg)
        return self

    @classmethod
    def bm25(cls) -> MethodId:
        return cls(kind=MethodKind.BM25)

    @classmethod
    def embed(cls, variant: RewardVariant) -> MethodId:
        return cls(kind=MethodKind.EMBED, variant=variant)

    @classmethod
    def parse(cls, name: str) -> MethodId:
        """Accept `bm25`, `embed`, a reward variant name, or `embed_<variant>`."""
        normalized = name.strip().lower().replace("-", "_")
        if normalized == MethodKind.BM25:
            return cls.bm25()
        if normalized == MethodKind.EMBED:
            return cls.embed(RewardVariant.NONE)
        normalized = normalized.removeprefix("embed_")
        try:
            return cls.embed(RewardVariant(normalized))
        except ValueError:
            msg = f"Unknown method {name!r}."
            raise ValueError(msg) from None

    @property
    def name(self) -> str:
        if self.kind == MethodKind.BM25:
            return "bm25"
        return f"embed_{self.variant}"

    def label(self, embedding_label: str = "GloVe") -> str:
        """Report label, e.g. `BM25`, `GloVe`, `GloVe_Sigmoid`."""
        if self.kind == MethodKind.BM25:
            return "BM25"
        if self.variant is None or self.variant == RewardVariant.NONE:
            return embedding_label
        return f"{embedding_label}_{self.variant.display_name}"


class RankedEntry(BaseModel):
    review_id: str
    score: float
    c_s: float | None = Field(default=None, json_schema_extra={"example": 0.83})
    e_n: float | None = Field(default=None, json_schema_extra={"example": -0.5})
    e_c: float | None = Field(default=None, json_schema_extra={"example": 0.3775})

    model_config = {"frozen": True}


class RankedList(BaseModel):
    attribute: list[str] = Field(json_schema_extra={"example": ["battery", "life"]})
    method: MethodId
    entries: list[RankedEntry] = Field(default_factory=list)
    excluded: int = Field(
        default=0,
        json_schema_extra={"description": "Reviews without any in-vocabulary token."},
    )

    @model_validator(mode="after")
    def _ordered_and_unique(self) -> RankedList:
        ids = [entry.review_id for entry in self.entries]
        if len(set(ids)) != len(ids):
            msg = "Ranked review ids must be unique."
            raise ValueError(msg)
        for before, after in zip(self.entries, self.entries[1:], strict=False):
            if (-before.score, before.review_id) > (-after.score, after.review_id):
                msg = "Entries must be sorted by descending score, then ascending review id."
                raise ValueError(msg)
        return self

    @property
    def review_ids(self) -> list[str]:
        return [entry.review_id for entry in self.entries]

    def records(self) -> list[dict[str, Any]]:
        """Rows of the JSONL output format."""
        attribute = " ".join(self.attribute)
        return [
            {
                "attribute": attribute,
                "method": self.method.name,
                "rank": rank,
                "review_id": entry.review_id,
                "score": entry.score,
                "c_s": entry.c_s,
                "e_n": entry.e_n,
                "e_c": entry.e_c,
            }
            for rank, entry in enumerate(self.entries, start=1)
        ]
