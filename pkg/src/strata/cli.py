"""Command-line interface.

Exit status is 0 on success, 1 for usage errors and 2 for data errors
(missing or malformed inputs).
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from . import __version__
from .boundary import BoundaryConfig, format_boundaries
from .errors import StrataError
from .evalkit import format_json, format_report, parse_boundary_file, precision_recall
from .hac import split_paragraphs
from .lexstats import IdfTable, build_idf_from_paths, load_idf_table, save_idf_table
from .morphology import content_words, default_stoplist, load_stoplist
from .pipeline import segment_text
from .render import export_dendrogram_json, render_outline
from .tiling import TileConfig, cohesion_curve, curve_boundaries, format_curve_csv, stem_stream

log = logging.getLogger("strata")

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="strata", description="Hierarchical discourse segmentation.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build-idf", help="count document frequencies over a corpus")
    p.add_argument("inputs", nargs="+", help="corpus files or directories")
    p.add_argument("-o", "--output", help="table path (default stdout)")

    def document_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("file", help="UTF-8 text, paragraphs separated by blank lines")
        p.add_argument("--idf", required=True, help="IDF table from build-idf")
        p.add_argument("--stoplist", help="stoplist file (default: bundled or $STRATA_STOPLIST)")
        p.add_argument("--pretagged", action="store_true", help="input is surface_TAG tokens")
        p.add_argument("-o", "--output", help="output path (default stdout)")

    def rule_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, default=1, help="segment size threshold (default 1)")
        p.add_argument(
            "--m-frac", type=float, default=0.2, help="cliff depth threshold as a fraction of tree depth"
        )

    p = sub.add_parser("segment", help="cluster paragraphs and print boundaries")
    document_args(p)
    rule_args(p)
    p.add_argument("--json-tree", metavar="OUT", help="also write the dendrogram as JSON")

    p = sub.add_parser("outline", help="plot paragraph depths")
    document_args(p)
    rule_args(p)
    p.add_argument("--format", choices=("ascii", "svg", "csv"), default="ascii")

    p = sub.add_parser("tile", help="moving-window cohesion baseline")
    document_args(p)
    p.add_argument("--window", type=int, default=120, help="window size in content words (even)")
    p.add_argument("--step", type=int, default=20)
    p.add_argument("--threshold", type=float, help="absolute cut-off (default mean - sd)")
    p.add_argument("--curve", metavar="OUT", help="write the cohesion curve as CSV")

    p = sub.add_parser("eval", help="precision/recall against gold boundaries")
    p.add_argument("--hyp", required=True)
    p.add_argument("--gold", required=True)
    p.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    return parser


def _read_text(path: str) -> str:
    try:
        with open(path, "rb") as fh:
            return fh.read().decode("utf-8")
    except OSError as exc:
        raise StrataError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise StrataError(f"{path}: not valid UTF-8 ({exc})") from exc


def _load_table(path: str) -> IdfTable:
    try:
        with open(path, "rb") as fh:
            return load_idf_table(fh)
    except OSError as exc:
        raise StrataError(f"cannot read IDF table {path}: {exc.strerror or exc}") from exc
    except StrataError as exc:
        raise StrataError(f"{path}: {exc}") from exc


def _stoplist(args) -> frozenset[str]:
    try:
        return load_stoplist(args.stoplist) if args.stoplist else default_stoplist()
    except OSError as exc:
        raise StrataError(f"cannot read stoplist: {exc}") from exc


def _write(path: str | None, data: bytes | str) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise StrataError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _cmd_build_idf(args) -> None:
    table = build_idf_from_paths(args.inputs)
    log.info("built IDF table over %d documents, %d terms", table.n_files, len(table.doc_freq))
    if args.output in (None, "-"):
        save_idf_table(table, sys.stdout.buffer)
        sys.stdout.flush()
        return
    try:
        with open(args.output, "wb") as fh:
            save_idf_table(table, fh)
    except OSError as exc:
        raise StrataError(f"cannot write {args.output}: {exc.strerror or exc}") from exc


def _segment(args):
    # input file first so a missing document is reported before a missing table
    text = _read_text(args.file)
    table = _load_table(args.idf)
    try:
        cfg = BoundaryConfig(args.n, args.m_frac)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return segment_text(text, table, _stoplist(args), cfg, pretagged=args.pretagged)


def _cmd_segment(args) -> None:
    result = _segment(args)
    if args.json_tree:
        _write(args.json_tree, export_dendrogram_json(result.tree) + b"\n")
    _write(args.output, format_boundaries(result.boundaries))


def _cmd_outline(args) -> None:
    result = _segment(args)
    _write(args.output, render_outline(result.outline(), args.format))


def _cmd_tile(args) -> None:
    text = _read_text(args.file)
    _load_table(args.idf)
    try:
        cfg = TileConfig(args.window, args.step, args.threshold)
    except StrataError as exc:
        raise UsageError(str(exc)) from exc
    stop = _stoplist(args)
    per_paragraph = [
        [stem for _, stem in content_words(p, stop, pretagged=args.pretagged)]
        for p in split_paragraphs(text)
    ]
    stems, gaps = stem_stream(per_paragraph)
    curve = cohesion_curve(stems, cfg)
    boundaries = curve_boundaries(curve, gaps, cfg)
    if args.curve:
        _write(args.curve, format_curve_csv(curve))
    _write(args.output, f"# tile {cfg.describe()}\n" + format_boundaries(boundaries))


def _read_boundaries(path: str) -> tuple[int, ...]:
    try:
        with open(path, "rb") as fh:
            return parse_boundary_file(fh)
    except OSError as exc:
        raise StrataError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except StrataError as exc:
        raise StrataError(f"{path}: {exc}") from exc


def _cmd_eval(args) -> None:
    result = precision_recall(_read_boundaries(args.hyp), _read_boundaries(args.gold))
    sys.stdout.write(format_json(result) if args.json else format_report(result))
    sys.stdout.flush()


COMMANDS = {
    "build-idf": _cmd_build_idf,
    "segment": _cmd_segment,
    "outline": _cmd_outline,
    "tile": _cmd_tile,
    "eval": _cmd_eval,
}


def run(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        COMMANDS[args.command](args)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except StrataError as exc:
        print(f"strata: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
