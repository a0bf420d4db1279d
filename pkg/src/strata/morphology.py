"""Tokenization, content-word filtering, stemming and per-paragraph stem counts."""

from __future__ import annotations

import enum
import os
import re
from dataclasses import dataclass
from importlib import resources
from typing import IO, Iterable, Mapping, Sequence

from .errors import StrataError
from .hac import Paragraph, count_sentences
from .lexstats import IdfTable, gsig
from .porter import porter_stem

__all__ = [
    "TokenKind",
    "Token",
    "StemEntry",
    "OPEN_CLASS_TAGS",
    "STOPLIST_ENV",
    "tokenize",
    "parse_pretagged",
    "filter_open_class",
    "word_set",
    "load_stoplist",
    "default_stoplist",
    "content_words",
    "analyze",
    "gsig_map",
]

OPEN_CLASS_TAGS = ("JJ", "VB", "RB", "NN")
STOPLIST_ENV = "STRATA_STOPLIST"

_WORD = r"[A-Za-z]+(?:'[A-Za-z]+)?"
_NUMBER = r"[0-9]+(?:[.,][0-9]+)*"
_TOKEN = re.compile(rf"(?P<word>{_WORD})|(?P<number>{_NUMBER})|(?P<symbol>\S)")
_WORD_RE = re.compile(_WORD)
_NUMBER_RE = re.compile(_NUMBER)


class TokenKind(str, enum.Enum):
    WORD = "word"
    NUMBER = "number"
    SYMBOL = "symbol"


@dataclass(frozen=True)
class Token:
    surface: str
    kind: TokenKind
    offset: int
    tag: str | None = None


@dataclass(frozen=True)
class StemEntry:
    stem: str
    gsig: float
    witnesses: frozenset[str]


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into word, number and one-character symbol tokens.

    Words are runs of ASCII letters with at most one internal apostrophe;
    whitespace is skipped.
    """
    return [
        Token(m.group(), TokenKind(m.lastgroup), m.start())
        for m in _TOKEN.finditer(text)
    ]


def _classify(surface: str) -> TokenKind:
    if _WORD_RE.fullmatch(surface):
        return TokenKind.WORD
    if _NUMBER_RE.fullmatch(surface):
        return TokenKind.NUMBER
    return TokenKind.SYMBOL


def parse_pretagged(text: str) -> list[Token]:
    """Read ``surface_TAG`` tokens separated by whitespace.

    The tag is whatever follows the last underscore; a token without one
    gets an empty tag and is never retained as open-class.
    """
    tokens = []
    for m in re.finditer(r"\S+", text):
        surface, sep, tag = m.group().rpartition("_")
        if not sep or not surface:
            surface, tag = m.group(), ""
        tokens.append(Token(surface, _classify(surface), m.start(), tag))
    return tokens


def filter_open_class(tokens: Iterable[Token], stoplist: Iterable[str] = ()) -> list[Token]:
    """Keep content words.

    Tagged tokens are kept when their tag starts with an adjective, verb,
    adverb or noun prefix; untagged tokens when they are not stopwords.
    Numbers and symbols are always dropped.
    """
    stop = stoplist if isinstance(stoplist, (set, frozenset)) else frozenset(stoplist)
    kept = []
    for tok in tokens:
        if tok.kind is not TokenKind.WORD:
            continue
        if tok.tag is not None:
            if tok.tag.startswith(OPEN_CLASS_TAGS):
                kept.append(tok)
        elif tok.surface.lower() not in stop:
            kept.append(tok)
    return kept


def word_set(text: str) -> set[str]:
    """Distinct lowercased words of ``text``."""
    return {m.group().lower() for m in _WORD_RE.finditer(text)}


def load_stoplist(source: IO[str] | IO[bytes] | str | os.PathLike) -> frozenset[str]:
    """Read one lowercased word per line; ``#`` starts a comment."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            data = fh.read()
    else:
        data = source.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    words = set()
    for line in data.splitlines():
        word = line.split("#", 1)[0].strip().lower()
        if word:
            words.add(word)
    return frozenset(words)


def default_stoplist() -> frozenset[str]:
    """The bundled stoplist, or the file named by ``$STRATA_STOPLIST``."""
    override = os.environ.get(STOPLIST_ENV)
    if override:
        return load_stoplist(override)
    with resources.files("strata").joinpath("data/stoplist.txt").open("rb") as fh:
        return load_stoplist(fh)


def content_words(text: str, stoplist: Iterable[str] = (), *, pretagged: bool = False) -> list[tuple[str, str]]:
    """``(lowercased word, stem)`` for each retained token, in text order."""
    tokens = parse_pretagged(text) if pretagged else tokenize(text)
    out = []
    for tok in filter_open_class(tokens, stoplist):
        word = tok.surface.lower()
        out.append((word, porter_stem(word.replace("'", ""))))
    return out


def analyze(
    paragraph_texts: Sequence[str],
    table: IdfTable,
    stoplist: Iterable[str] = (),
    *,
    pretagged: bool = False,
) -> tuple[list[Paragraph], dict[str, StemEntry]]:
    """Turn paragraphs into stem counts and collect per-stem significance.

    A stem's significance is the minimum IDF over the surface words seen
    with that stem in this text.
    """
    stop = frozenset(stoplist)
    paragraphs = []
    witnesses: dict[str, set[str]] = {}
    for index, text in enumerate(paragraph_texts):
        try:
            words = content_words(text, stop, pretagged=pretagged)
        except StrataError as exc:
            raise StrataError(f"paragraph {index + 1}: {exc}") from exc
        if pretagged:
            plain = " ".join(t.surface for t in parse_pretagged(text))
        else:
            plain = text
        freqs: dict[str, int] = {}
        for word, stem in words:
            freqs[stem] = freqs.get(stem, 0) + 1
            witnesses.setdefault(stem, set()).add(word)
        paragraphs.append(Paragraph(index + 1, count_sentences(plain), freqs))

    entries = {
        stem: StemEntry(stem, min(gsig(table, w) for w in words), frozenset(words))
        for stem, words in witnesses.items()
    }
    return paragraphs, entries


def gsig_map(entries: Mapping[str, StemEntry]) -> dict[str, float]:
    return {stem: entry.gsig for stem, entry in entries.items()}
