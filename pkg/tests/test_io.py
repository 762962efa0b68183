import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from argagg.core import ArgumentationFramework, enumerate_complete
from argagg.io import ParseError, parse_af, parse_labeling, parse_profile, serialize_af, serialize_profile
from argagg.rules import IndividualRationalityError, LabelingProfile

from test_core import frameworks

AF_S_TEXT = "arg A\narg B\narg C\natt B A\natt B C\natt C B"


def test_parse_simple(af_s):
    assert parse_af(AF_S_TEXT) == af_s


def test_comments_crlf_and_duplicate_att(af_s):
    text = "# simple\r\narg A\r\narg B  # the attacker\r\narg C\r\natt B A\r\natt B C\r\natt C B\r\natt B A\r\n"
    assert parse_af(text) == af_s


def test_empty():
    assert parse_af("") == ArgumentationFramework([])


@pytest.mark.parametrize(
    "text,line",
    [
        ("att X Y", 1),
        ("arg A\narg A", 2),
        ("arg A\nfoo", 2),
        ("arg A\natt A", 2),
        ("arg a-b", 1),
    ],
)
def test_af_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_af(text)
    assert exc.value.lineno == line


def test_parse_p64(af_s, p64):
    assert parse_profile("6: A=in,B=out,C=in\n4: A=out,B=in,C=out", af_s) == p64


def test_single_voter():
    af = ArgumentationFramework("A")
    p = parse_profile("1: A=in", af)
    assert len(p) == 1 and p.voters == ("v1",)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("3: A=maybe,B=out,C=in", "bad label token"),
        ("0: A=in,B=out,C=in", "multiplicity"),
        ("2: A=in,B=out", "missing assignment"),
        ("2: A=in,B=out,C=in,Z=in", "unknown argument"),
        ("2: A=in,A=out,B=out,C=in", "twice"),
        ("A=in,B=out,C=in", "multiplicity"),
        ("x: A=in,B=out,C=in", "multiplicity"),
        ("# nothing", "no ballots"),
    ],
)
def test_profile_errors(af_s, text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_profile(text, af_s)


def test_profile_rationality(af_s):
    with pytest.raises(IndividualRationalityError):
        parse_profile("1: A=in,B=in,C=in", af_s)
    assert len(parse_profile("1: A=in,B=in,C=in", af_s, require_complete=False)) == 1


def test_labeling_spaces(af_s):
    assert str(parse_labeling("A=in B=out C=in", af_s)) == "A=in B=out C=in"


def test_profile_round_trip(p64):
    text = serialize_profile(p64)
    assert text == "6: A=in,B=out,C=in\n4: A=out,B=in,C=out\n"
    assert parse_profile(text, p64.framework) == p64


@settings(max_examples=100, deadline=None)
@given(frameworks(), st.data())
def test_round_trips(af, data):
    again = parse_af(serialize_af(af))
    assert again == af and again.arguments == af.arguments
    comp = enumerate_complete(af)
    labs = data.draw(st.lists(st.sampled_from(comp), min_size=1, max_size=6))
    p = LabelingProfile.of(af, labs)
    if len(af):
        assert parse_profile(serialize_profile(p), af) == p
