import io
import math

import pytest
from hypothesis import given, strategies as st

from strata.errors import ParseError, StrataError
from strata.lexstats import (
    IdfTable,
    build_idf_from_paths,
    build_idf_table,
    gsig,
    load_idf_table,
    save_idf_table,
)

TOY = [
    "The star rose.",
    "A moon and a planet.",
    "Star light, STAR bright.",
    "Nothing here.",
]


def test_build_counts_documents_not_occurrences():
    table = build_idf_table(TOY)
    assert table.n_files == 4
    # counted by hand: docs 1 and 3, case-folded, repeats ignored
    assert table.doc_freq["star"] == 2
    assert table.doc_freq["a"] == 1
    assert table.doc_freq["moon"] == 1


def test_build_single_and_identical_documents():
    assert dict(build_idf_table(["a b a"]).doc_freq) == {"a": 1, "b": 1}
    table = build_idf_table(["sun moon"] * 3)
    assert table.doc_freq["sun"] == 3 and table.doc_freq["moon"] == 3


def test_build_rejects_empty_corpus():
    with pytest.raises(StrataError, match="empty corpus"):
        build_idf_table([])


def test_build_reports_undecodable_document():
    with pytest.raises(StrataError, match="document 1"):
        build_idf_table(["fine", b"\xff\xfe bad"])


def test_build_from_paths_walks_directories(data_dir):
    table = build_idf_from_paths([data_dir / "corpus"])
    assert table.n_files == 6
    assert table.doc_freq["prices"] == 1


def test_build_from_paths_names_missing_file(tmp_path):
    with pytest.raises(StrataError, match="nope.txt"):
        build_idf_from_paths([tmp_path / "nope.txt"])


def test_gsig_values():
    table = IdfTable(4, {"star": 2, "the": 4})
    assert gsig(table, "star") == pytest.approx(0.6931471805599453, abs=1e-12)
    assert gsig(table, "the") == 0.0
    assert gsig(table, "unseen") == pytest.approx(math.log(4), abs=1e-12)
    assert table.gsig("star") == gsig(table, "star")


def test_save_format():
    buf = io.BytesIO()
    save_idf_table(IdfTable(2, {"b": 2, "a": 1}), buf)
    assert buf.getvalue() == b"#N 2\na\t1\nb\t2\n"
    buf = io.BytesIO()
    save_idf_table(IdfTable(3, {}), buf)
    assert buf.getvalue() == b"#N 3\n"


def test_load_parses():
    table = load_idf_table(io.BytesIO(b"#N 4\nstar\t2\n"))
    assert table == IdfTable(4, {"star": 2})


@pytest.mark.parametrize(
    "payload, message, line",
    [
        (b"#N 4\nstar\t5\n", "count exceeds n_files", 2),
        (b"star\t2\n", "missing #N header", 1),
        (b"", "missing #N header", 1),
        (b"#N 4\nstar\ttwo\n", "non-integer", 2),
        (b"#N 4\nsun\t1\nstar\t0\n", "at least 1", 3),
        (b"#N x\n", "bad #N header", 1),
        (b"#N 4\nnotab\n", "expected", 2),
    ],
)
def test_load_errors(payload, message, line):
    with pytest.raises(ParseError, match=message) as info:
        load_idf_table(io.BytesIO(payload))
    assert info.value.line == line


def test_invariants_enforced():
    with pytest.raises(StrataError):
        IdfTable(0, {})
    with pytest.raises(StrataError):
        IdfTable(2, {"a": 3})


def test_table_is_read_only():
    table = IdfTable(2, {"a": 1})
    with pytest.raises(TypeError):
        table.doc_freq["a"] = 2


words = st.text(alphabet="abcdefgh", min_size=1, max_size=4)
docs = st.lists(st.lists(words, max_size=8).map(" ".join), min_size=1, max_size=8)


@given(docs)
def test_round_trip_preserves_gsig(documents):
    table = build_idf_table(documents)
    buf = io.BytesIO()
    save_idf_table(table, buf)
    loaded = load_idf_table(io.BytesIO(buf.getvalue()))
    assert loaded == table
    for word in list(table.doc_freq) + ["zzz"]:
        assert gsig(loaded, word) == gsig(table, word)


@given(docs)
def test_gsig_zero_iff_word_in_every_document(documents):
    table = build_idf_table(documents)
    for word, count in table.doc_freq.items():
        assert (gsig(table, word) == 0.0) == (count == table.n_files)
        assert gsig(table, word) >= 0.0


@given(st.integers(1, 500), st.data())
def test_gsig_non_increasing_in_doc_count(n, data):
    a = data.draw(st.integers(1, n))
    b = data.draw(st.integers(a, n))
    table = IdfTable(n, {"x": a, "y": b})
    assert gsig(table, "x") >= gsig(table, "y")
