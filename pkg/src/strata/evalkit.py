"""Precision/recall scoring of boundary sets against gold annotations."""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import IO, Iterable

from .errors import ParseError, StrataError

__all__ = [
    "EvalResult",
    "precision_recall",
    "parse_boundary_file",
    "percent",
    "format_report",
    "format_json",
]


@dataclass(frozen=True)
class EvalResult:
    precision: float
    recall: float
    hits: int
    hyp_count: int
    gold_count: int

    @property
    def empty_hypothesis(self) -> bool:
        """True when precision is 1.0 only by convention (nothing proposed)."""
        return self.hyp_count == 0


def precision_recall(hyp: Iterable[int], gold: Iterable[int]) -> EvalResult:
    """Exact gap matching; an empty hypothesis scores precision 1.0."""
    hyp_set, gold_set = set(hyp), set(gold)
    if not gold_set:
        raise StrataError("empty gold set")
    hits = len(hyp_set & gold_set)
    precision = hits / len(hyp_set) if hyp_set else 1.0
    return EvalResult(precision, hits / len(gold_set), hits, len(hyp_set), len(gold_set))


def parse_boundary_file(source: IO[bytes] | IO[str]) -> tuple[int, ...]:
    """Whitespace-separated 1-based gap indices; ``#`` starts a comment."""
    data = source.read()
    if isinstance(data, bytes):
        data = data.decode("ascii", errors="replace")
    gaps = set()
    for lineno, line in enumerate(data.splitlines(), start=1):
        for item in line.split("#", 1)[0].split():
            try:
                gap = int(item)
            except ValueError:
                raise ParseError(f"not an integer: {item!r}", lineno) from None
            if gap < 1:
                raise ParseError(f"gap must be >= 1, got {gap}", lineno)
            gaps.add(gap)
    return tuple(sorted(gaps))


def percent(fraction: float) -> int:
    """Fraction as a whole percentage, rounding halves up (0.875 -> 88)."""
    value = Decimal(repr(fraction)) * 100
    return int(value.quantize(Decimal(1), rounding=ROUND_HALF_UP))


def format_report(result: EvalResult) -> str:
    rows = [
        ("precision", f"{percent(result.precision)}%", f"{result.hits}/{result.hyp_count}"),
        ("recall", f"{percent(result.recall)}%", f"{result.hits}/{result.gold_count}"),
    ]
    lines = [f"{name:<10} {pct:>5}  ({ratio})" for name, pct, ratio in rows]
    if result.empty_hypothesis:
        lines.append("note: empty hypothesis; precision set to 100% by convention")
    return "\n".join(lines) + "\n"


def format_json(result: EvalResult) -> str:
    payload = {
        "precision": result.precision,
        "recall": result.recall,
        "hits": result.hits,
        "hyp": result.hyp_count,
        "gold": result.gold_count,
    }
    return json.dumps(payload) + "\n"
