"""Binary inverted-index file.

Little-endian layout:

    magic  b"RVIX"
    u8     format version
    u32    document count, then per document: u32 id length, id (utf-8), u32 length
    u32    term count, then per term: u32 term length, term (utf-8), u32 posting count,
           then per posting: u32 document ordinal, u32 term frequency

Documents and terms are written in sorted order so equal indexes give equal bytes.
"""
import struct
from io import BytesIO
from pathlib import Path
from typing import BinaryIO

from errors import IndexVersionError, StoreFormatError, StoreMissingError
from retrieval.index import InvertedIndex, Posting

MAGIC = b"RVIX"
FORMAT_VERSION = 2

_U8 = struct.Struct("<B")
_U32 = struct.Struct("<I")
_POSTING = struct.Struct("<II")


def _write_text(stream: BinaryIO, text: str) -> None:
    encoded = text.encode("utf-8")
    stream.write(_U32.pack(len(encoded)))
    stream.write(encoded)


def _read_exact(stream: BinaryIO, size: int) -> bytes:
    data = stream.read(size)
    if len(data) != size:
        msg = "Index file ends unexpectedly."
        raise StoreFormatError(msg)
    return data


def _read_u32(stream: BinaryIO) -> int:
    (value,) = _U32.unpack(_read_exact(stream, _U32.size))
    return int(value)


def _read_text(stream: BinaryIO) -> str:
    try:
        return _read_exact(stream, _read_u32(stream)).decode("utf-8")
    except UnicodeDecodeError:
        msg = "Index file holds a string that is not utf-8."
        raise StoreFormatError(msg) from None


def dump_index(index: InvertedIndex) -> bytes:
    stream = BytesIO()
    stream.write(MAGIC)
    stream.write(_U8.pack(FORMAT_VERSION))
    ordinals = {review_id: ordinal for ordinal, review_id in enumerate(index.doc_len)}
    stream.write(_U32.pack(len(ordinals)))
    for review_id, length in index.doc_len.items():
        _write_text(stream, review_id)
        stream.write(_U32.pack(length))
    stream.write(_U32.pack(len(index.postings)))
    for term, postings in index.postings.items():
        _write_text(stream, term)
        stream.write(_U32.pack(len(postings)))
        for posting in postings:
            stream.write(_POSTING.pack(ordinals[posting.review_id], posting.tf))
    return stream.getvalue()


def write_index(path: Path, index: InvertedIndex) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(dump_index(index))


def read_index(path: Path) -> InvertedIndex:
    if not path.is_file():
        msg = f"Index file {path} does not exist, run `index` first."
        raise StoreMissingError(msg)
    with path.open("rb") as stream:
        if stream.read(len(MAGIC)) != MAGIC:
            msg = f"{path} is not an index file."
            raise StoreFormatError(msg)
        (version,) = _U8.unpack(_read_exact(stream, _U8.size))
        if version != FORMAT_VERSION:
            msg = f"{path} has index format {version}, this version reads {FORMAT_VERSION}."
            raise IndexVersionError(msg)

        documents = [(_read_text(stream), _read_u32(stream)) for _ in range(_read_u32(stream))]
        postings: dict[str, list[Posting]] = {}
        for _ in range(_read_u32(stream)):
            term = _read_text(stream)
            entries = postings.setdefault(term, [])
            for _ in range(_read_u32(stream)):
                ordinal, tf = _POSTING.unpack(_read_exact(stream, _POSTING.size))
                if ordinal >= len(documents):
                    msg = f"{path}: posting of {term!r} points past the document table."
                    raise StoreFormatError(msg)
                entries.append(Posting(documents[ordinal][0], tf))
        if stream.read(1):
            msg = f"{path} has trailing bytes after the postings."
            raise StoreFormatError(msg)
    return InvertedIndex(postings, dict(documents))
