"""Corpus document-frequency table and IDF-based word significance."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import IO, Iterable, Mapping, Sequence

from .errors import ParseError, StrataError

__all__ = [
    "IdfTable",
    "build_idf_table",
    "build_idf_from_paths",
    "gsig",
    "save_idf_table",
    "load_idf_table",
]


@dataclass(frozen=True)
class IdfTable:
    """Number of corpus documents and, per lowercased word, how many contain it."""

    n_files: int
    doc_freq: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.n_files < 1:
            raise StrataError("n_files must be at least 1")
        for word, count in self.doc_freq.items():
            if not 1 <= count <= self.n_files:
                raise StrataError(
                    f"document count {count} for {word!r} outside 1..{self.n_files}"
                )
        object.__setattr__(self, "doc_freq", MappingProxyType(dict(self.doc_freq)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdfTable):
            return NotImplemented
        return self.n_files == other.n_files and dict(self.doc_freq) == dict(other.doc_freq)

    def __hash__(self) -> int:
        return hash((self.n_files, frozenset(self.doc_freq.items())))

    def gsig(self, word: str) -> float:
        return gsig(self, word)


def build_idf_table(documents: Sequence[str | bytes]) -> IdfTable:
    """Count, for each lowercased word, the documents it occurs in.

    Repeats inside one document count once. ``bytes`` documents are decoded
    as UTF-8.
    """
    from .morphology import word_set

    if not documents:
        raise StrataError("empty corpus")
    doc_freq: dict[str, int] = {}
    for index, doc in enumerate(documents):
        if isinstance(doc, bytes):
            try:
                doc = doc.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise StrataError(f"document {index}: not valid UTF-8 ({exc})") from exc
        for word in word_set(doc):
            doc_freq[word] = doc_freq.get(word, 0) + 1
    return IdfTable(len(documents), doc_freq)


def _expand_paths(paths: Iterable[str | os.PathLike]) -> list[str]:
    files: list[str] = []
    for path in paths:
        path = os.fspath(path)
        if os.path.isdir(path):
            found = []
            for root, _dirs, names in os.walk(path):
                found.extend(os.path.join(root, name) for name in names)
            files.extend(sorted(found))
        else:
            files.append(path)
    return files


def build_idf_from_paths(paths: Iterable[str | os.PathLike]) -> IdfTable:
    """Build a table treating each file (directories are walked) as one document."""
    files = _expand_paths(paths)
    if not files:
        raise StrataError("empty corpus")
    documents = []
    for path in files:
        try:
            with open(path, "rb") as fh:
                raw = fh.read()
            documents.append(raw.decode("utf-8"))
        except (OSError, UnicodeDecodeError) as exc:
            raise StrataError(f"cannot read corpus document {path}: {exc}") from exc
    return build_idf_table(documents)


def gsig(table: IdfTable, word: str) -> float:
    """General significance ``ln(N / N_i)``; unseen words count as ``N_i = 1``."""
    return math.log(table.n_files / table.doc_freq.get(word, 1))


def save_idf_table(table: IdfTable, destination: IO[bytes]) -> None:
    lines = [f"#N {table.n_files}\n"]
    lines.extend(f"{word}\t{table.doc_freq[word]}\n" for word in sorted(table.doc_freq))
    destination.write("".join(lines).encode("utf-8"))


def load_idf_table(source: IO[bytes]) -> IdfTable:
    data = source.read()
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not valid UTF-8 ({exc})") from exc
    lines = data.splitlines()
    if not lines or not lines[0].startswith("#N"):
        raise ParseError("missing #N header", 1)
    try:
        n_files = int(lines[0][2:].strip())
    except ValueError:
        raise ParseError(f"bad #N header {lines[0]!r}", 1) from None
    if n_files < 1:
        raise ParseError("n_files must be at least 1", 1)

    doc_freq: dict[str, int] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        term, sep, count_text = line.rpartition("\t")
        if not sep or not term:
            raise ParseError(f"expected '<term>\\t<count>', got {line!r}", lineno)
        try:
            count = int(count_text)
        except ValueError:
            raise ParseError(f"non-integer count {count_text!r}", lineno) from None
        if count > n_files:
            raise ParseError("count exceeds n_files", lineno)
        if count < 1:
            raise ParseError("count must be at least 1", lineno)
        doc_freq[term] = count
    return IdfTable(n_files, doc_freq)
