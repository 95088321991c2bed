"""Named registry of segmenters that split cleaned text into raw terms."""
import re
from collections.abc import Callable
from pathlib import Path
from typing import Protocol

from errors import ConfigurationError


class Segmenter(Protocol):
    def __call__(self, text: str) -> list[str]: ...


SegmenterFactory = Callable[[Path | None], Segmenter]

_REGISTRY: dict[str, SegmenterFactory] = {}

_WORD = re.compile(r"\w+")


def register_tokenizer(name: str) -> Callable[[SegmenterFactory], SegmenterFactory]:
    def decorator(factory: SegmenterFactory) -> SegmenterFactory:
        _REGISTRY[name.lower()] = factory
        return factory

    return decorator


def registered_tokenizers() -> list[str]:
    return sorted(_REGISTRY)


def get_tokenizer(name: str, dictionary: Path | None = None) -> Segmenter:
    try:
        factory = _REGISTRY[name.lower()]
    except KeyError:
        known = ", ".join(registered_tokenizers())
        msg = f"Unknown tokenizer {name!r}, expected one of: {known}."
        raise ConfigurationError(msg) from None
    return factory(dictionary)


@register_tokenizer("simple")
def _simple(_dictionary: Path | None = None) -> Segmenter:
    """Split on whitespace and punctuation; needs no dictionary."""

    def segment(text: str) -> list[str]:
        return _WORD.findall(text)

    return segment


@register_tokenizer("jieba")
def _jieba(dictionary: Path | None = None) -> Segmenter:
    """Dictionary-based segmentation for scripts written without spaces."""
    try:
        import jieba
    except ImportError:
        msg = "The 'jieba' tokenizer needs the jieba package (install the 'chinese' extra)."
        raise ConfigurationError(msg) from None

    jieba.setLogLevel(log_level="ERROR")
    tokenizer = jieba.Tokenizer()
    if dictionary is not None:
        if not dictionary.is_file():
            msg = f"Segmenter dictionary {dictionary} does not exist."
            raise ConfigurationError(msg)
        tokenizer.load_userdict(str(dictionary))

    def segment(text: str) -> list[str]:
        return [term for term in tokenizer.lcut(text) if _WORD.search(term)]

    return segment
