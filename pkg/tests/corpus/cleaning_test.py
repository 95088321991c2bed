from pathlib import Path

import pytest
from corpus.cleaning import clean_text, filter_review, load_stopwords, tokenize
from corpus.tokenizers import get_tokenizer


@pytest.mark.parametrize(
    ("raw", "expected"),
    [
        ("Visit https://shop.example.com/item?id=3 now", "Visit now"),
        ("see www.example.com for details", "see for details"),
        ("<p>Screen &amp; battery</p>", "Screen battery"),
        ("Broken 😡😡 again", "Broken again"),
        ("line\x00one\x1ftwo", "line one two"),
        ("ｆｕｌｌｗｉｄｔｈ text", "fullwidth text"),
        ("  spaced \n\t out  ", "spaced out"),
    ],
)
def test_clean_text_removes_junk(raw: str, expected: str) -> None:
    assert expected == clean_text(raw)


@pytest.mark.parametrize(
    "raw",
    [
        "&amp;amp; nested entities &lt;b&gt;bold&lt;/b&gt;",
        "<a href='http://x.co'>link</a> 👍🏽 done",
        "plain text stays plain",
        "",
    ],
)
def test_clean_text_is_idempotent(raw: str) -> None:
    once = clean_text(raw)
    assert once == clean_text(once)


def test_tokenize_lowercases_and_drops_stopwords() -> None:
    segmenter = get_tokenizer("simple")
    tokens = tokenize("The Battery died, and THE charger too", segmenter, {"the", "and", "too"})
    assert ["battery", "died", "charger"] == tokens


def test_tokenize_keeps_repeated_tokens() -> None:
    segmenter = get_tokenizer("simple")
    assert ["slow", "slow", "slow"] == tokenize("slow slow slow", segmenter, set())


@pytest.mark.parametrize(
    ("length", "kept"),
    [(0, False), (4, False), (5, True), (12, True)],
)
def test_filter_review_uses_minimum_length(length: int, kept: bool) -> None:
    assert kept == filter_review(["word"] * length)


def test_filter_review_custom_minimum() -> None:
    assert filter_review(["one"], min_len=1)


def test_load_stopwords_skips_comments_and_blanks(tmp_path: Path) -> None:
    path = tmp_path / "stopwords.txt"
    path.write_text("# header\nThe\n\nand  # inline\n的\n", encoding="utf-8")
    assert frozenset({"the", "and", "的"}) == load_stopwords(path)
