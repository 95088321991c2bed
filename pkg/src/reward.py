"""Emotion rewards: the Sigmoid family mapping polarity e_n in [-1, 1] to a ranking weight e_c."""
import math
from collections.abc import Iterable
from enum import StrEnum

from errors import PolarityDomainError


class RewardVariant(StrEnum):
    SIGMOID = "sigmoid"
    ISIGMOID = "isigmoid"
    MSIGMOID = "msigmoid"
    IMSIGMOID = "imsigmoid"
    NONE = "none"

    @classmethod
    def _missing_(cls, value: object) -> "RewardVariant | None":
        if isinstance(value, str):
            for member in cls:
                if member.value == value.strip().lower():
                    return member
        return None

    @property
    def display_name(self) -> str:
        return _DISPLAY_NAMES[self]


_DISPLAY_NAMES = {
    RewardVariant.SIGMOID: "Sigmoid",
    RewardVariant.ISIGMOID: "iSigmoid",
    RewardVariant.MSIGMOID: "mSigmoid",
    RewardVariant.IMSIGMOID: "imSigmoid",
    RewardVariant.NONE: "",
}

# Variants grouped by which polarity sign gets the larger reward.
POS_HIGH_REWARD = frozenset({RewardVariant.SIGMOID, RewardVariant.IMSIGMOID})
POS_LOW_REWARD = frozenset({RewardVariant.ISIGMOID, RewardVariant.MSIGMOID})
NEG_HIGH_REWARD = frozenset({RewardVariant.ISIGMOID, RewardVariant.IMSIGMOID})
NEG_LOW_REWARD = frozenset({RewardVariant.SIGMOID, RewardVariant.MSIGMOID})


def _sigmoid(x: float) -> float:
    return 1.0 / (1.0 + math.exp(-x))


def _inverse_sigmoid(x: float) -> float:
    return 1.0 / (1.0 + math.exp(x))


def reward(e_n: float, variant: RewardVariant) -> float:
    if not -1.0 <= e_n <= 1.0:
        msg = f"Emotion polarity {e_n} is outside [-1, 1]."
        raise PolarityDomainError(msg)

    match variant:
        case RewardVariant.SIGMOID:
            return _sigmoid(e_n)
        case RewardVariant.ISIGMOID:
            return _inverse_sigmoid(e_n)
        case RewardVariant.MSIGMOID:
            return _inverse_sigmoid(e_n) if e_n >= 0 else _sigmoid(e_n)
        case RewardVariant.IMSIGMOID:
            return _sigmoid(e_n) if e_n >= 0 else _inverse_sigmoid(e_n)
        case RewardVariant.NONE:
            return 1.0


def reward_curve(
    variants: Iterable[RewardVariant],
    points: int = 21,
) -> list[dict[str, float]]:
    """Tabulate e_c for every variant over `points` evenly spaced e_n in [-1, 1]."""
    if points < 2:
        msg = "A reward curve needs at least two points."
        raise ValueError(msg)
    variants = list(variants)
    rows = []
    for i in range(points):
        e_n = -1.0 + 2.0 * i / (points - 1)
        rows.append({"e_n": e_n} | {str(variant): reward(e_n, variant) for variant in variants})
    return rows
