import pytest

from lpbsynth import (
    Dnf,
    DnfFormatError,
    Lpb,
    PolarityError,
    format_dnf,
    format_lpb,
    parse_dnf,
    parse_lpb,
)


def test_parse_basic():
    d = parse_dnf("p dnf 4\n1 2 0\n3 4 0\n")
    assert d.m == 4
    assert set(d.clauses) == {frozenset({1, 2}), frozenset({3, 4})}


def test_parse_constant_true():
    d = parse_dnf("p dnf 2\n0\n")
    assert d.m == 2 and d.is_true


def test_parse_constant_false():
    assert parse_dnf("p dnf 3\n").is_false


def test_parse_comments_and_blanks():
    d = parse_dnf("# a comment\n\np dnf 2\n# another\n1 0\n")
    assert set(d.clauses) == {frozenset({1})}


def test_negative_literal_rejected():
    with pytest.raises(PolarityError):
        parse_dnf("p dnf 3\n1 -2 0\n")


def test_index_out_of_range():
    with pytest.raises(DnfFormatError):
        parse_dnf("p dnf 2\n1 3 0\n")


def test_missing_header():
    with pytest.raises(DnfFormatError):
        parse_dnf("1 2 0\n")


def test_missing_terminator():
    with pytest.raises(DnfFormatError):
        parse_dnf("p dnf 2\n1 2\n")


def test_tokens_after_terminator():
    with pytest.raises(DnfFormatError):
        parse_dnf("p dnf 2\n1 0 2 0\n")


def test_unnormalized_kept():
    d = parse_dnf("p dnf 2\n1 0\n1 2 0\n")
    assert len(d.clauses) == 2  # absorption is not applied by the parser


def test_dnf_round_trip():
    d = Dnf.of(5, [{1, 2}, {3}, {4, 5, 1}])
    assert parse_dnf(format_dnf(d)) == d
    assert parse_dnf(format_dnf(Dnf.true(3))) == Dnf.true(3)
    assert parse_dnf(format_dnf(Dnf.false(3))) == Dnf.false(3)


def test_lpb_round_trip():
    l = Lpb.of((4, 3, 2, 2, 1), 5)
    assert format_lpb(l) == "4 3 2 2 1 >= 5"
    assert parse_lpb(format_lpb(l)) == l
    neg = Lpb.of((0, 0), -1)
    assert parse_lpb(format_lpb(neg)) == neg


def test_lpb_errors():
    from lpbsynth import LpbFormatError

    for text in ("1 2 3", "1 >= 2 3", "1 x >= 2", "1 -2 >= 1"):
        with pytest.raises(LpbFormatError):
            parse_lpb(text)
