"""Outline plots (ASCII, SVG, CSV) and dendrogram JSON export."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

from .boundary import BoundarySet
from .errors import StrataError
from .hac import Leaf, Node, make_merge

__all__ = [
    "OutlineView",
    "render_outline",
    "export_dendrogram_json",
    "parse_dendrogram_json",
]

FORMATS = ("ascii", "svg", "csv")


@dataclass(frozen=True)
class OutlineView:
    depths: tuple[int, ...]
    boundaries: tuple[int, ...] = ()
    sentence_offsets: tuple[int, ...] = field(default=())
    paragraph_count: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "depths", tuple(self.depths))
        gaps = self.boundaries.gaps if isinstance(self.boundaries, BoundarySet) else self.boundaries
        object.__setattr__(self, "boundaries", tuple(sorted(gaps)))
        if not self.paragraph_count:
            object.__setattr__(self, "paragraph_count", len(self.depths))
        if not self.sentence_offsets:
            # one sentence per paragraph when counts are unknown
            object.__setattr__(self, "sentence_offsets", tuple(range(1, self.paragraph_count + 1)))
        object.__setattr__(self, "sentence_offsets", tuple(self.sentence_offsets))
        if len(self.depths) != self.paragraph_count:
            raise StrataError("depths length must equal paragraph_count")
        if len(self.sentence_offsets) != self.paragraph_count:
            raise StrataError("sentence_offsets length must equal paragraph_count")
        if any(not 1 <= g < self.paragraph_count for g in self.boundaries):
            raise StrataError("boundary gap out of range")

    @classmethod
    def from_counts(
        cls, depths: Sequence[int], boundaries: Iterable[int] | BoundarySet, sentence_counts: Sequence[int]
    ) -> "OutlineView":
        return cls(tuple(depths), boundaries, tuple(accumulate(sentence_counts)), len(depths))


def render_outline(view: OutlineView, format: str = "ascii") -> bytes:
    if format == "ascii":
        text = _ascii(view)
    elif format == "svg":
        text = _svg(view)
    elif format == "csv":
        text = _csv(view)
    else:
        raise StrataError(f"unknown outline format {format!r}; expected one of {FORMATS}")
    return text.encode("utf-8")


def _csv(view: OutlineView) -> str:
    marked = set(view.boundaries)
    rows = ["paragraph,depth,boundary_after"]
    rows.extend(
        f"{p},{d},{'true' if p in marked else 'false'}"
        for p, d in enumerate(view.depths, start=1)
    )
    return "\n".join(rows) + "\n"


def _ascii(view: OutlineView) -> str:
    # one column per paragraph, tallest level first; a boundary after
    # paragraph g marks column g with '|' wherever the bar leaves room
    marked = set(view.boundaries)
    rows = []
    for level in range(max(view.depths, default=0), 0, -1):
        cells = []
        for p, depth in enumerate(view.depths, start=1):
            if depth >= level:
                cells.append("#")
            else:
                cells.append("|" if p in marked else " ")
        rows.append("".join(cells))
    rows.append("".join("|" if p in marked else "-" for p in range(1, view.paragraph_count + 1)))
    return "\n".join(rows) + "\n"


# SVG page: 6in x 2.4in, user units of 1/100 in
_W, _H = 600, 240
_LEFT, _RIGHT, _TOP, _BOTTOM = 40, 15, 30, 45


def _svg(view: OutlineView) -> str:
    total = view.sentence_offsets[-1] if view.sentence_offsets else 1
    top_depth = max(max(view.depths, default=0), 1)
    plot_w = _W - _LEFT - _RIGHT
    plot_h = _H - _TOP - _BOTTOM
    axis_y = _TOP + plot_h

    def x(sentence: float) -> float:
        return _LEFT + plot_w * sentence / total

    def y(depth: float) -> float:
        return axis_y - plot_h * depth / top_depth

    starts = (0,) + view.sentence_offsets[:-1]
    path = []
    for start, end, depth in zip(starts, view.sentence_offsets, view.depths):
        cmd = "M" if not path else "L"
        path.append(f"{cmd}{x(start):.2f},{y(depth):.2f}")
        path.append(f"L{x(end):.2f},{y(depth):.2f}")

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="6in" height="2.4in" '
        f'viewBox="0 0 {_W} {_H}">',
        f"<title>{escape(f'Outline of {view.paragraph_count} paragraphs')}</title>",
        f'<line class="axis" x1="{_LEFT}" y1="{axis_y}" x2="{_W - _RIGHT}" y2="{axis_y}" '
        'stroke="black" stroke-width="1"/>',
        f'<line class="axis" x1="{_LEFT}" y1="{_TOP}" x2="{_LEFT}" y2="{axis_y}" '
        'stroke="black" stroke-width="1"/>',
    ]
    for level in range(top_depth + 1):
        out.append(
            f'<text x="{_LEFT - 6}" y="{y(level) + 3:.2f}" font-size="8" '
            f'text-anchor="end">{level}</text>'
        )
    # paragraph marks above the axis, placed at paragraph ends
    for p, end in enumerate(view.sentence_offsets, start=1):
        out.append(
            f'<line class="paragraph-mark" x1="{x(end):.2f}" y1="{axis_y - 6}" '
            f'x2="{x(end):.2f}" y2="{axis_y}" stroke="black" stroke-width="0.8"/>'
        )
        out.append(
            f'<text x="{x(end):.2f}" y="{_TOP - 8}" font-size="7" '
            f'text-anchor="middle">{p}</text>'
        )
    # sentence marks below it
    label_every = max(1, round(total / 20))
    for s in range(total + 1):
        out.append(
            f'<line class="sentence-mark" x1="{x(s):.2f}" y1="{axis_y}" '
            f'x2="{x(s):.2f}" y2="{axis_y + 4}" stroke="black" stroke-width="0.5"/>'
        )
        if s % label_every == 0:
            out.append(
                f'<text x="{x(s):.2f}" y="{axis_y + 14}" font-size="7" '
                f'text-anchor="middle">{s}</text>'
            )
    for g in view.boundaries:
        bx = x(view.sentence_offsets[g - 1])
        out.append(
            f'<line class="boundary" x1="{bx:.2f}" y1="{_TOP}" x2="{bx:.2f}" y2="{axis_y}" '
            'stroke="gray" stroke-width="1" stroke-dasharray="4,3"/>'
        )
    out.append(
        f'<path class="outline" d="{" ".join(path)}" fill="none" stroke="black" stroke-width="1.5"/>'
    )
    out.append(
        f'<text x="{_LEFT + plot_w / 2:.2f}" y="{_H - 8}" font-size="8" '
        'text-anchor="middle">sentence</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _to_obj(node: Node) -> dict:
    if isinstance(node, Leaf):
        return {"type": "leaf", "paragraph": node.paragraph}
    return {
        "type": "merge",
        "proximity": node.proximity,
        "size": node.size,
        "depth": node.depth,
        "children": [_to_obj(node.left), _to_obj(node.right)],
    }


def export_dendrogram_json(tree: Node) -> bytes:
    return json.dumps(_to_obj(tree), separators=(",", ":")).encode("utf-8")


def _from_obj(obj: dict) -> Node:
    kind = obj.get("type")
    if kind == "leaf":
        return Leaf(int(obj["paragraph"]))
    if kind == "merge":
        left, right = (_from_obj(child) for child in obj["children"])
        node = make_merge(left, right, float(obj["proximity"]))
        if node.size != obj["size"] or node.depth != obj["depth"]:
            raise StrataError("dendrogram JSON size/depth do not match its children")
        return node
    raise StrataError(f"unknown dendrogram node type {kind!r}")


def parse_dendrogram_json(data: bytes | str) -> Node:
    try:
        obj = json.loads(data)
    except ValueError as exc:
        raise StrataError(f"invalid dendrogram JSON: {exc}") from exc
    try:
        return _from_obj(obj)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, StrataError):
            raise
        raise StrataError(f"malformed dendrogram JSON: {exc}") from exc
