from collections.abc import Iterable
from typing import NamedTuple

from schemas.lexicon import EmotionLexicon


class PolarityScore(NamedTuple):
    p: int
    n: int
    e_n: float


def polarity(tokens: Iterable[str], lex: EmotionLexicon) -> PolarityScore:
    """Balance of positive against negative lexicon hits, counted with multiplicity."""
    p = n = 0
    for token in tokens:
        if token in lex.positive:
            p += 1
        elif token in lex.negative:
            n += 1
    if p + n == 0:
        # No emotion words: neutral.
        return PolarityScore(p=0, n=0, e_n=0.0)
    return PolarityScore(p=p, n=n, e_n=(p - n) / (p + n))
