"""Seed and lexicon TSV files, and the plain two-list lexicon format."""
import csv
import logging
from pathlib import Path

from errors import OverlappingSeedsError, StoreFormatError, StoreMissingError
from pydantic import ValidationError
from schemas.lexicon import EmotionLexicon, Origin, Provenance, Side

logger = logging.getLogger(__name__)

LEXICON_COLUMNS = ["word", "side", "origin", "iteration", "ratio"]


def _rows(path: Path, kind: str) -> list[dict[str, str]]:
    if not path.is_file():
        msg = f"{kind.capitalize()} file {path} does not exist."
        raise StoreMissingError(msg)
    with path.open(encoding="utf-8", newline="") as tsv_file:
        lines = (line for line in tsv_file if line.strip() and not line.startswith("#"))
        return list(csv.DictReader(lines, delimiter="\t"))


def _side(value: str | None, path: Path, number: int) -> Side:
    try:
        return Side((value or "").strip().lower())
    except ValueError:
        msg = f"{path}:{number} has side {value!r}, expected 'pos' or 'neg'."
        raise StoreFormatError(msg) from None


def _split_sides(
    entries: list[tuple[str, Side]],
    path: Path,
) -> tuple[set[str], set[str]]:
    positive = {word for word, side in entries if side == Side.POSITIVE}
    negative = {word for word, side in entries if side == Side.NEGATIVE}
    if overlap := positive & negative:
        msg = f"{path} lists words on both sides: {', '.join(sorted(overlap))}"
        raise OverlappingSeedsError(msg)
    return positive, negative


def read_seeds(path: Path) -> EmotionLexicon:
    entries = []
    for number, row in enumerate(_rows(path, "seed"), start=2):
        if not (word := (row.get("word") or "").strip().lower()):
            continue
        entries.append((word, _side(row.get("side"), path, number)))
    positive, negative = _split_sides(entries, path)
    return EmotionLexicon.from_seeds(positive, negative)


def read_lexicon(path: Path) -> EmotionLexicon:
    entries = []
    provenance = {}
    for number, row in enumerate(_rows(path, "lexicon"), start=2):
        word = (row.get("word") or "").strip().lower()
        if not word:
            continue
        entries.append((word, _side(row.get("side"), path, number)))
        try:
            provenance[word] = Provenance(
                origin=Origin(row.get("origin") or Origin.IMPORTED),
                iteration=int(row.get("iteration") or 0),
                ratio_at_admission=float(ratio) if (ratio := row.get("ratio")) else None,
            )
        except (ValueError, ValidationError) as e:
            msg = f"{path}:{number} is not a valid lexicon row: {e}"
            raise StoreFormatError(msg) from None
    positive, negative = _split_sides(entries, path)
    return EmotionLexicon(
        positive=frozenset(positive),
        negative=frozenset(negative),
        provenance=provenance,
    )


def write_lexicon(path: Path, lexicon: EmotionLexicon) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as tsv_file:
        writer = csv.writer(tsv_file, delimiter="\t", lineterminator="\n")
        writer.writerow(LEXICON_COLUMNS)
        for side in (Side.NEGATIVE, Side.POSITIVE):
            for word in sorted(lexicon.words(side)):
                record = lexicon.provenance.get(word, Provenance(origin=Origin.IMPORTED))
                ratio = record.ratio_at_admission
                writer.writerow(
                    [word, side, record.origin, record.iteration, "" if ratio is None else ratio],
                )


def read_word_list(path: Path) -> set[str]:
    """One word per line, as in the published two-file lexicons."""
    if not path.is_file():
        msg = f"Word list {path} does not exist."
        raise StoreMissingError(msg)
    lines = path.read_text(encoding="utf-8").splitlines()
    return {word.lower() for line in lines if (word := line.strip()) and not word.startswith("#")}


def import_lexicon(positive_words: set[str], negative_words: set[str]) -> EmotionLexicon:
    """Build a lexicon from plain word lists; words on both lists are dropped."""
    if ambiguous := positive_words & negative_words:
        logger.warning(
            "Dropping %d words listed as both positive and negative: %s",
            len(ambiguous),
            ", ".join(sorted(ambiguous)[:10]),
        )
    positive = positive_words - ambiguous
    negative = negative_words - ambiguous
    return EmotionLexicon(
        positive=frozenset(positive),
        negative=frozenset(negative),
        provenance={word: Provenance(origin=Origin.IMPORTED) for word in positive | negative},
    )
