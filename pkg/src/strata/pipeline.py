"""End-to-end segmentation of one document."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .boundary import BoundaryConfig, BoundarySet, detect_boundaries, outline_depths
from .hac import Node, Paragraph, TextStats, cluster, split_paragraphs
from .lexstats import IdfTable
from .morphology import StemEntry, analyze, gsig_map
from .render import OutlineView

__all__ = ["Segmentation", "segment_text"]


@dataclass(frozen=True)
class Segmentation:
    paragraphs: list[Paragraph]
    stems: dict[str, StemEntry]
    tree: Node
    boundaries: BoundarySet
    depths: list[int]

    def outline(self) -> OutlineView:
        return OutlineView.from_counts(
            self.depths, self.boundaries, [p.sentence_count for p in self.paragraphs]
        )


def segment_text(
    text: str,
    table: IdfTable,
    stoplist: Iterable[str] = (),
    cfg: BoundaryConfig = BoundaryConfig(),
    *,
    pretagged: bool = False,
    gsig_scale: float = 1.0,
) -> Segmentation:
    """Split, analyse, cluster and detect boundaries.

    ``gsig_scale`` multiplies every significance value; boundaries and tree
    shape do not depend on it.
    """
    paragraphs, stems = analyze(split_paragraphs(text), table, stoplist, pretagged=pretagged)
    sig = {stem: value * gsig_scale for stem, value in gsig_map(stems).items()}
    tree = cluster(paragraphs, TextStats.from_paragraphs(paragraphs), sig)
    return Segmentation(paragraphs, stems, tree, detect_boundaries(tree, cfg), outline_depths(tree))
