import pytest
from hypothesis import given, strategies as st

from socrank.enumeration import all_rankings
from socrank.errors import ParseError, ValidationError
from socrank.model import Roster, SocialRelation
from socrank.notation import (
    parse_document,
    parse_partition,
    parse_ranking,
    render_document,
    render_ranking,
    render_relation,
)
from socrank.solutions import apply

EX1_TEXT = "roster: x y z w\n{x,y,z} {x,y} > {x} {x,z} {y} > {z} {w}\n"


def test_parse_worked_example(ex1):
    roster, r1, _ = ex1
    doc = parse_document(EX1_TEXT)
    assert doc.roster == roster and doc.ranking == r1


def test_comments_tiebreak_and_empty():
    doc = parse_document("# c\nroster: a b c\ntiebreak: c a b\n")
    assert doc.ranking == () and doc.roster.tiebreak == ("c", "a", "b")
    assert parse_document("roster: a b c\nempty\n").ranking == ()


@pytest.mark.parametrize(
    "line, exc, code",
    [
        ("{x} > {x}", ValidationError, "DUPLICATE_COALITION"),
        ("{q}", ValidationError, "FOREIGN_MEMBER"),
        ("{}", ParseError, "PARSE_ERROR"),
        ("{x} >", ParseError, "PARSE_ERROR"),
        ("> {x}", ParseError, "PARSE_ERROR"),
        ("{x", ParseError, "PARSE_ERROR"),
        ("{x} ; {y}", ParseError, "PARSE_ERROR"),
    ],
)
def test_errors(xyz, line, exc, code):
    with pytest.raises(exc) as err:
        parse_ranking(line, xyz)
    assert err.value.code == code


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse_document("roster: x y z\n{x} {}\n")
    assert (err.value.line, err.value.column) == (2, 5)
    with pytest.raises(ParseError):
        parse_document("{x}\n")
    with pytest.raises(ValidationError):
        parse_document("roster: x y\n")


ROSTER = Roster(("x", "y", "z"))
ALL = list(all_rankings(ROSTER, 4))


@given(st.sampled_from(ALL))
def test_render_parse_roundtrip(r):
    text = render_document(r, ROSTER)
    assert parse_document(text).ranking == r
    assert parse_ranking(render_ranking(r, ROSTER), ROSTER) == r


def test_whitespace_insignificant(xyz):
    assert parse_ranking(" { x , y }>{z}", xyz) == parse_ranking("{x,y} > {z}", xyz)


def test_render_relation_partition(ex1):
    roster, r1, r2 = ex1
    assert render_relation(apply("L", roster, r1), roster) == "x > y > z > w"
    assert render_relation(apply("SL", roster, r2), roster) == "{x,y,z,w}"
    assert parse_partition("z > {x,y} > w", roster) == apply("SL", roster, r1)


def test_render_relation_cycle():
    rel = SocialRelation(3, (1, -1, 1))
    out = render_relation(rel, ROSTER)
    assert out.endswith("CYCLIC") and "x | 1 1 0" in out


def test_parse_partition_requires_everyone():
    with pytest.raises(ValueError):
        parse_partition("x > y", ROSTER)
