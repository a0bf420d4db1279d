"""Moving-window lexical cohesion baseline.

A window of ``window_w`` content stems slides over the text in steps of
``step``. At each window centre the raw stem counts of the left and right
halves are compared by cosine; sub-threshold local minima of that curve
become boundaries at the nearest paragraph gap. There is no smoothing and
no depth scoring, so this is a rough reference point rather than a full
TextTiling.
"""

from __future__ import annotations

import math
import statistics
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .boundary import Boundary, BoundarySet, Rule
from .errors import StrataError

__all__ = [
    "TileConfig",
    "cohesion_curve",
    "curve_threshold",
    "curve_boundaries",
    "stem_stream",
    "format_curve_csv",
]


@dataclass(frozen=True)
class TileConfig:
    """``threshold`` set means an absolute cut-off; otherwise mean - ``sd_factor`` * sd."""

    window_w: int = 120
    step: int = 20
    threshold: float | None = None
    sd_factor: float = 1.0

    def __post_init__(self) -> None:
        if self.window_w < 2 or self.window_w % 2:
            raise StrataError("window must be an even integer >= 2")
        if self.step < 1:
            raise StrataError("step must be a positive integer")

    def describe(self) -> str:
        mode = (
            f"absolute {self.threshold:g}"
            if self.threshold is not None
            else f"mean-{self.sd_factor:g}sd"
        )
        return f"window={self.window_w} step={self.step} threshold={mode}"


def _cosine(a: Counter, b: Counter) -> float:
    dot = sum(a[k] * b[k] for k in sorted(a.keys() & b.keys()))
    if not dot:
        return 0.0
    norm_a = math.sqrt(sum(v * v for v in a.values()))
    norm_b = math.sqrt(sum(v * v for v in b.values()))
    return min(1.0, dot / (norm_a * norm_b))


def cohesion_curve(stems: Sequence[str], cfg: TileConfig = TileConfig()) -> list[tuple[int, float]]:
    """``(position, cosine)`` pairs; ``position`` is the index of the first right-half stem."""
    if len(stems) < cfg.window_w:
        raise StrataError("text shorter than window")
    half = cfg.window_w // 2
    curve = []
    for centre in range(half, len(stems) - half + 1, cfg.step):
        left = Counter(stems[centre - half : centre])
        right = Counter(stems[centre : centre + half])
        curve.append((centre, _cosine(left, right)))
    return curve


def curve_threshold(curve: Sequence[tuple[int, float]], cfg: TileConfig) -> float:
    if cfg.threshold is not None:
        return cfg.threshold
    values = [v for _, v in curve]
    return statistics.fmean(values) - cfg.sd_factor * statistics.pstdev(values)


def curve_boundaries(
    curve: Sequence[tuple[int, float]],
    paragraph_gaps: Mapping[int, int],
    cfg: TileConfig = TileConfig(),
) -> BoundarySet:
    """Snap sub-threshold local minima to the closest gap.

    ``paragraph_gaps`` maps gap index g to the stem position where paragraph
    g+1 starts. Equidistant gaps resolve to the earlier one.
    """
    if not curve:
        raise StrataError("empty cohesion curve")
    if not paragraph_gaps:
        return BoundarySet()
    threshold = curve_threshold(curve, cfg)
    values = [v for _, v in curve]
    found = []
    for i, (pos, value) in enumerate(curve):
        if value >= threshold:
            continue
        if i > 0 and value > values[i - 1]:
            continue
        if i + 1 < len(values) and value > values[i + 1]:
            continue
        gap = min(paragraph_gaps, key=lambda g: (abs(paragraph_gaps[g] - pos), g))
        found.append(Boundary(gap, Rule.VALLEY))
    return BoundarySet.from_records(found)


def stem_stream(per_paragraph: Sequence[Sequence[str]]) -> tuple[list[str], dict[int, int]]:
    """Concatenate per-paragraph stem sequences and locate each paragraph gap."""
    stems: list[str] = []
    gaps: dict[int, int] = {}
    for ordinal, seq in enumerate(per_paragraph, start=1):
        stems.extend(seq)
        if ordinal < len(per_paragraph):
            gaps[ordinal] = len(stems)
    return stems, gaps


def format_curve_csv(curve: Sequence[tuple[int, float]]) -> str:
    lines = ["position,cohesion"]
    lines.extend(f"{pos},{value!r}" for pos, value in curve)
    return "\n".join(lines) + "\n"
