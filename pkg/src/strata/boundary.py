"""Boundary detection on a paragraph dendrogram and outline depths."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .hac import Leaf, Merge, Node

__all__ = [
    "Rule",
    "Boundary",
    "BoundarySet",
    "BoundaryConfig",
    "notch_rule",
    "cliff_rule",
    "merge_points",
    "detect_boundaries",
    "outline_depths",
    "format_boundaries",
]


class Rule(str, enum.Enum):
    NOTCH = "notch"
    CLIFF = "cliff"
    # used by the moving-window baseline
    VALLEY = "valley"


@dataclass(frozen=True, order=True)
class Boundary:
    gap: int
    rule: Rule


@dataclass(frozen=True)
class BoundarySet:
    """Boundaries sorted by gap; gap ``g`` lies between paragraphs g and g+1."""

    boundaries: tuple[Boundary, ...] = ()

    def __post_init__(self) -> None:
        gaps = [b.gap for b in self.boundaries]
        if any(g < 1 for g in gaps):
            raise ValueError("boundary gaps must be >= 1")
        if any(a >= b for a, b in zip(gaps, gaps[1:])):
            raise ValueError("boundary gaps must be strictly increasing")

    @classmethod
    def from_records(cls, records: Iterable[Boundary]) -> "BoundarySet":
        """Sort and drop duplicate gaps, keeping the first record seen for each."""
        seen: dict[int, Boundary] = {}
        for rec in records:
            seen.setdefault(rec.gap, rec)
        return cls(tuple(seen[g] for g in sorted(seen)))

    @property
    def gaps(self) -> tuple[int, ...]:
        return tuple(b.gap for b in self.boundaries)

    def __iter__(self) -> Iterator[Boundary]:
        return iter(self.boundaries)

    def __len__(self) -> int:
        return len(self.boundaries)


@dataclass(frozen=True)
class BoundaryConfig:
    n: int = 1
    m_fraction: float = 0.2

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not self.m_fraction > 0:
            raise ValueError("m_fraction must be positive")


def notch_rule(s1: Node, s2: Node, n: int) -> bool:
    return s1.size > n and s2.size > n


def cliff_rule(s1: Node, s2: Node, n: int, m: float) -> bool:
    return s1.size > n and s2.size <= n and s1.depth - s2.depth > m


def merge_points(tree: Node) -> Iterator[tuple[Merge, int]]:
    """Yield every merge node with the gap between its two children."""
    stack: list[tuple[Node, int]] = [(tree, 0)]  # node, ordinal offset before it
    while stack:
        node, offset = stack.pop()
        if isinstance(node, Leaf):
            continue
        gap = offset + node.left.size
        yield node, gap
        stack.append((node.right, gap))
        stack.append((node.left, offset))


def detect_boundaries(tree: Node, cfg: BoundaryConfig = BoundaryConfig()) -> BoundarySet:
    m = cfg.m_fraction * tree.depth
    found = []
    for node, gap in merge_points(tree):
        if node.right.size > node.left.size:
            s1, s2 = node.right, node.left
        else:
            s1, s2 = node.left, node.right
        if notch_rule(s1, s2, cfg.n):
            found.append(Boundary(gap, Rule.NOTCH))
        elif cliff_rule(s1, s2, cfg.n, m):
            found.append(Boundary(gap, Rule.CLIFF))
    return BoundarySet.from_records(found)


def outline_depths(tree: Node) -> list[int]:
    """Edges from each leaf to the root, in paragraph order."""
    depths = []
    stack: list[tuple[Node, int]] = [(tree, 0)]
    while stack:
        node, level = stack.pop()
        if isinstance(node, Leaf):
            depths.append(level)
        else:
            stack.append((node.right, level + 1))
            stack.append((node.left, level + 1))
    return depths


def format_boundaries(boundaries: BoundarySet | Iterable[int]) -> str:
    gaps = boundaries.gaps if isinstance(boundaries, BoundarySet) else sorted(boundaries)
    return " ".join(str(g) for g in gaps) + "\n" if gaps else ""
