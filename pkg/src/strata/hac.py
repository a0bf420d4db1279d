"""Linear-order-preserving agglomerative clustering of paragraphs.

Paragraphs start as singleton segments. Each round merges the pair of
*consecutive* segments whose weighted term vectors have the highest cosine,
so the resulting dendrogram keeps the leaves in text order. Only the two
neighbour proximities of a fresh merge are recomputed, which keeps the
number of proximity evaluations linear in the paragraph count.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence, Union

from .errors import StrataError

__all__ = [
    "Paragraph",
    "TextStats",
    "TermVector",
    "Leaf",
    "Merge",
    "Node",
    "TIE_TOLERANCE",
    "split_paragraphs",
    "count_sentences",
    "term_vector",
    "proximity",
    "merge_segments",
    "make_merge",
    "cluster",
    "leaves",
    "ProximityCounter",
]

# Proximities closer than this are ties (resolved leftmost). Absorbs
# last-ulp noise so that mathematically equal cosines compare equal.
TIE_TOLERANCE = 1e-12

_BLANK_LINES = re.compile(r"\n[ \t\r\f\v]*\n\s*")
_SENTENCE_BREAK = re.compile(r"(?<=[.!?])\s+")


@dataclass(frozen=True)
class Paragraph:
    ordinal: int
    sentence_count: int
    freqs: Mapping[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class TextStats:
    """Whole-text stem totals; fixed for the duration of a clustering run."""

    total_freq: Mapping[str, int]
    f_max: int

    @classmethod
    def from_paragraphs(cls, paragraphs: Sequence[Paragraph]) -> "TextStats":
        total: dict[str, int] = {}
        for para in paragraphs:
            for stem, count in para.freqs.items():
                total[stem] = total.get(stem, 0) + count
        return cls(total, max(total.values(), default=0))


@dataclass(frozen=True)
class TermVector:
    weights: Mapping[str, float]
    norm: float

    @classmethod
    def from_weights(cls, weights: Mapping[str, float]) -> "TermVector":
        return cls(dict(weights), math.sqrt(sum(w * w for _, w in sorted(weights.items()))))


@dataclass(frozen=True)
class Leaf:
    paragraph: int

    size = 1
    depth = 0


@dataclass(frozen=True)
class Merge:
    left: "Node"
    right: "Node"
    proximity: float
    size: int
    depth: int


Node = Union[Leaf, Merge]


def make_merge(left: Node, right: Node, proximity: float) -> Merge:
    return Merge(
        left,
        right,
        proximity,
        left.size + right.size,
        1 + max(left.depth, right.depth),
    )


def leaves(node: Node) -> Iterator[int]:
    """Paragraph ordinals in in-order (text) order."""
    stack = [node]
    while stack:
        cur = stack.pop()
        if isinstance(cur, Leaf):
            yield cur.paragraph
        else:
            stack.append(cur.right)
            stack.append(cur.left)


def split_paragraphs(text: str) -> list[str]:
    """Split on runs of blank lines; drops empty paragraphs."""
    parts = [p.strip() for p in _BLANK_LINES.split(text.replace("\r\n", "\n"))]
    parts = [p for p in parts if p]
    if not parts:
        raise StrataError("no paragraphs")
    return parts


def count_sentences(paragraph: str) -> int:
    """Naive count: a sentence ends at ``.``, ``!`` or ``?`` followed by whitespace.

    Abbreviations are not special-cased; "e.g. cats. dogs." counts as 3.
    """
    spans = [s for s in _SENTENCE_BREAK.split(paragraph.strip()) if s]
    return max(1, len(spans))


def term_vector(
    freqs: Mapping[str, int],
    stats: TextStats,
    gsig_map: Mapping[str, float],
) -> TermVector:
    """Weight each stem by in-segment count, relative text frequency and significance."""
    weights = {}
    for stem, count in freqs.items():
        try:
            total = stats.total_freq[stem]
        except KeyError:
            raise StrataError(f"stem {stem!r} missing from text statistics") from None
        try:
            sig = gsig_map[stem]
        except KeyError:
            raise StrataError(f"stem {stem!r} missing from significance map") from None
        weights[stem] = count * (total / stats.f_max) * sig
    return TermVector.from_weights(weights)


def proximity(a: TermVector, b: TermVector) -> float:
    """Cosine of two non-negative vectors; 0 when either is the zero vector."""
    if a.norm == 0.0 or b.norm == 0.0:
        return 0.0
    small, large = (a, b) if len(a.weights) <= len(b.weights) else (b, a)
    common = sorted(k for k in small.weights if k in large.weights)
    dot = sum(a.weights[k] * b.weights[k] for k in common)
    return min(1.0, dot / (a.norm * b.norm))


def merge_segments(a: Mapping[str, int], b: Mapping[str, int]) -> dict[str, int]:
    merged = dict(a)
    for stem, count in b.items():
        merged[stem] = merged.get(stem, 0) + count
    return merged


class ProximityCounter:
    """Tally of proximity evaluations made by :func:`cluster`."""

    __slots__ = ("calls",)

    def __init__(self) -> None:
        self.calls = 0


def cluster(
    paragraphs: Sequence[Paragraph],
    stats: TextStats | None = None,
    gsig_map: Mapping[str, float] | None = None,
    *,
    counter: ProximityCounter | None = None,
) -> Node:
    """Build the dendrogram of ``paragraphs``.

    ``stats`` defaults to totals over ``paragraphs``. ``gsig_map`` defaults to
    1.0 for every stem. A :class:`ProximityCounter` passed as ``counter``
    is incremented once per proximity evaluation.
    """
    if not paragraphs:
        raise StrataError("no paragraphs")
    if stats is None:
        stats = TextStats.from_paragraphs(paragraphs)
    if gsig_map is None:
        gsig_map = {stem: 1.0 for stem in stats.total_freq}

    def prox(a: TermVector, b: TermVector) -> float:
        if counter is not None:
            counter.calls += 1
        return proximity(a, b)

    nodes: list[Node] = [Leaf(p.ordinal) for p in paragraphs]
    freqs: list[Mapping[str, int]] = [p.freqs for p in paragraphs]
    vectors = [term_vector(f, stats, gsig_map) for f in freqs]
    # links[i] is the proximity between segments i and i+1
    links = [prox(vectors[i], vectors[i + 1]) for i in range(len(vectors) - 1)]

    while len(nodes) > 1:
        best = 0
        for i in range(1, len(links)):
            if links[i] > links[best] + TIE_TOLERANCE:
                best = i
        nodes[best] = make_merge(nodes[best], nodes[best + 1], links[best])
        freqs[best] = merge_segments(freqs[best], freqs[best + 1])
        vectors[best] = term_vector(freqs[best], stats, gsig_map)
        del nodes[best + 1], freqs[best + 1], vectors[best + 1], links[best]
        if best > 0:
            links[best - 1] = prox(vectors[best - 1], vectors[best])
        if best < len(links):
            links[best] = prox(vectors[best], vectors[best + 1])
    return nodes[0]
