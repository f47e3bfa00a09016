import pytest
from hypothesis import given, settings

from galg.seifert import SeifertPair
from galg.smat import SmatError, format_smat, parse_smat, read_smat, write_smat
from strategies import seifert_pairs


def test_parse_trefoil():
    s = parse_smat("2 1\n-1 1\n0 -1\n")
    assert s == SeifertPair(((-1, 1), (0, -1)), 1)


def test_parse_hopf():
    s = parse_smat("1 2\n-1\n")
    assert s.mat == ((-1,),) and s.r == 2


def test_odd_excess_rejected():
    with pytest.raises(SmatError, match="invariant violation.*n - r \\+ 1 = 1"):
        parse_smat("2 2\n0 1\n0 0\n")


def test_comments_and_blank_lines():
    s = parse_smat("# trefoil\n\n2 1\n# row one\n-1 1\n\n0 -1\n")
    assert s.mat == ((-1, 1), (0, -1))


def test_non_integer_token_position():
    with pytest.raises(SmatError, match="non-integer token 'x'") as info:
        parse_smat("2 1\n-1 x\n0 -1\n")
    assert (info.value.line, info.value.column) == (2, 4)


def test_row_length_mismatch():
    with pytest.raises(SmatError, match="row length mismatch") as info:
        parse_smat("2 1\n-1 1 3\n0 -1\n")
    assert info.value.line == 2


def test_missing_rows():
    with pytest.raises(SmatError, match="expected 2 matrix rows"):
        parse_smat("2 1\n-1 1\n")


def test_knot_determinant_checked():
    with pytest.raises(SmatError, match="invariant violation"):
        parse_smat("2 1\n0 2\n0 0\n")


def test_empty_matrix():
    assert parse_smat("0 1\n") == SeifertPair((), 1)


@settings(max_examples=200)
@given(seifert_pairs)
def test_round_trip(s):
    assert parse_smat(format_smat(s)) == s


def test_file_round_trip(tmp_path):
    s = SeifertPair(((0, 1), (0, 0)), 1)
    path = tmp_path / "h.smat"
    write_smat(path, s)
    assert path.read_text() == "2 1\n0 1\n0 0\n"
    assert read_smat(path) == s
