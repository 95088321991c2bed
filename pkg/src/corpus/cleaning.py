"""Junk removal, tokenization and length filtering for raw review text.

The junk patterns (URLs, emoticons, HTML entities and tags, control
characters) are a best-effort set; e-commerce platforms each leak their own
markup and none of it carries review content.
"""
import re
import unicodedata
from collections.abc import Collection
from pathlib import Path

from corpus.tokenizers import Segmenter

URL_RE = re.compile(r"(?:https?|ftp)://\S+|www\.\S+", re.IGNORECASE)
HTML_ENTITY_RE = re.compile(r"&(?:[a-zA-Z][a-zA-Z0-9]*|#[0-9]+|#[xX][0-9a-fA-F]+);")
HTML_TAG_RE = re.compile(r"</?[a-zA-Z][^<>]*>")
EMOTICON_RE = re.compile(
    "["
    "\U0001f1e6-\U0001f1ff"  # regional indicators (flags)
    "\U0001f300-\U0001f5ff"  # symbols and pictographs
    "\U0001f600-\U0001f64f"  # emoticons
    "\U0001f680-\U0001f6ff"  # transport and map
    "\U0001f700-\U0001faff"  # extended pictographs
    "\u2600-\u27bf"  # misc symbols, dingbats
    "\ufe0e\ufe0f\u200d"  # variation selectors, zero-width joiner
    "]+",
)
CONTROL_RE = re.compile(r"[\x00-\x1f\x7f-\x9f]")
WHITESPACE_RE = re.compile(r"\s+")

_JUNK = (URL_RE, HTML_TAG_RE, HTML_ENTITY_RE, EMOTICON_RE, CONTROL_RE)


def _clean_once(text: str) -> str:
    text = unicodedata.normalize("NFKC", text)
    for pattern in _JUNK:
        # Replace with a space so removal never glues neighbouring words together.
        text = pattern.sub(" ", text)
    return WHITESPACE_RE.sub(" ", text).strip()


def clean_text(raw: str) -> str:
    cleaned = _clean_once(raw)
    # Removing one match can expose another (e.g. nested entities); iterate to a fixpoint.
    while (again := _clean_once(cleaned)) != cleaned:
        cleaned = again
    return cleaned


def tokenize(text: str, segmenter: Segmenter, stopwords: Collection[str]) -> list[str]:
    tokens = (term.strip().lower() for term in segmenter(text))
    return [token for token in tokens if token and token not in stopwords]


def filter_review(tokens: Collection[str], min_len: int = 5) -> bool:
    """Keep a review only if it has at least `min_len` tokens."""
    return len(tokens) >= min_len


def load_stopwords(path: Path) -> frozenset[str]:
    words = set()
    for line in path.read_text(encoding="utf-8").splitlines():
        if (word := line.split("#", 1)[0].strip().lower()) != "":
            words.add(word)
    return frozenset(words)
