import io
import json

import pytest
from hypothesis import given, strategies as st

from strata.errors import ParseError, StrataError
from strata.evalkit import format_json, format_report, parse_boundary_file, percent, precision_recall

GOLD = [2, 3, 5, 8, 9, 12, 13, 16, 18]
HAC = [2, 3, 5, 9, 11, 13, 16, 18]


def test_table_row():
    r = precision_recall(HAC, GOLD)
    assert (r.hits, r.hyp_count, r.gold_count) == (7, 8, 9)
    assert r.precision == 7 / 8
    assert r.recall == pytest.approx(7 / 9)


def test_identity_and_disjoint():
    r = precision_recall(GOLD, GOLD)
    assert (r.precision, r.recall) == (1.0, 1.0)
    r = precision_recall([1, 4], [2, 3])
    assert (r.precision, r.recall, r.hits) == (0.0, 0.0, 0)


def test_empty_sets():
    with pytest.raises(StrataError, match="empty gold set"):
        precision_recall([1], [])
    r = precision_recall([], [3])
    assert r.precision == 1.0 and r.recall == 0.0 and r.empty_hypothesis
    assert "convention" in format_report(r)


def test_parse_boundary_file():
    assert parse_boundary_file(io.BytesIO(b"2 3 5\n# note\n8")) == (2, 3, 5, 8)
    assert parse_boundary_file(io.BytesIO(b"5 5 2")) == (2, 5)
    assert parse_boundary_file(io.StringIO("4 # tail comment 9\n")) == (4,)
    assert parse_boundary_file(io.BytesIO(b"")) == ()


@pytest.mark.parametrize("payload, line", [(b"x", 1), (b"1 2\n3 0\n", 2), (b"1\n\n2.5", 3)])
def test_parse_errors(payload, line):
    with pytest.raises(ParseError) as info:
        parse_boundary_file(io.BytesIO(payload))
    assert info.value.line == line


def test_percent_rounds_half_up():
    assert percent(0.875) == 88
    assert percent(7 / 9) == 78
    assert percent(0.125) == 13
    assert percent(0.0) == 0 and percent(1.0) == 100


def test_reports():
    r = precision_recall(HAC, GOLD)
    report = format_report(r)
    assert "88%" in report and "78%" in report and "7/8" in report
    payload = json.loads(format_json(r))
    assert payload == {"precision": 0.875, "recall": 7 / 9, "hits": 7, "hyp": 8, "gold": 9}


gap_sets = st.sets(st.integers(1, 30), min_size=1, max_size=15)


@given(gap_sets, gap_sets)
def test_swap_symmetry(a, b):
    ab, ba = precision_recall(a, b), precision_recall(b, a)
    assert ab.precision == ba.recall and ab.recall == ba.precision
    assert 0 <= ab.hits <= min(len(a), len(b))
