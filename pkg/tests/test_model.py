import pytest
from hypothesis import given, strategies as st

from socrank.errors import ValidationError
from socrank.model import (
    Roster,
    SocialRelation,
    Verdict,
    class_index,
    domain,
    restrict,
    validate,
)


def test_roster_needs_three_distinct_members():
    with pytest.raises(ValueError):
        Roster(("x", "y"))
    with pytest.raises(ValueError):
        Roster(("x", "y", "x"))
    with pytest.raises(ValueError):
        Roster(("x", "y", "z"), tiebreak=("x", "y", "w"))


def test_tiebreak_defaults_to_listing_order():
    r = Roster(("x", "y", "z"))
    assert r.beats(0, 1) and r.beats(1, 2)
    r = Roster(("x", "y", "z"), tiebreak=("z", "x", "y"))
    assert r.beats(2, 0) and r.priority(1) == 2


def test_ranking_builder_matches_parser(ex1):
    roster, r1, _ = ex1
    built = roster.ranking([["xyz", "xy"], ["x", "xz", "y"], ["z", "w"]])
    assert built == r1


@pytest.mark.parametrize(
    "classes, code",
    [
        ([["x"], ["x"]], "DUPLICATE_COALITION"),
        ([[], ["x"]], "EMPTY_CLASS"),
        ([["q"]], "FOREIGN_MEMBER"),
    ],
)
def test_builder_rejects_malformed(xyz, classes, code):
    with pytest.raises(ValidationError) as err:
        xyz.ranking(classes)
    assert err.value.code == code


def test_validate_raw_masks(xyz):
    ok = xyz.ranking([["xy"], ["x"]])
    validate(ok, xyz)
    for bad, code in [
        ((0b10, 0b10), "DUPLICATE_COALITION"),
        ((0, 0b10), "EMPTY_CLASS"),
        ((1 << 9,), "FOREIGN_MEMBER"),
        ((0b1,), "EMPTY_COALITION"),
    ]:
        with pytest.raises(ValidationError) as err:
            validate(bad, xyz)
        assert err.value.code == code


def test_class_index(ex1, xyz):
    roster, r1, _ = ex1
    assert class_index(r1, roster.coalition("x", "z")) == 2
    assert class_index(r1, roster.coalition("x", "y", "w")) is None
    assert class_index(xyz.ranking([["x"]]), xyz.coalition("x")) == 1


def test_restrict_examples(xyz):
    a, b, c = xyz.coalition("x"), xyz.coalition("y"), xyz.coalition("z")
    r = ((1 << a) | (1 << b), 1 << c)
    assert restrict(r, [a, c]) == (1 << a, 1 << c)
    assert restrict(r, domain(r)) == r
    assert restrict(r, 0) == ()


rankings3 = st.lists(st.integers(1, 7), unique=True, max_size=7).flatmap(
    lambda coals: st.lists(st.integers(0, 3), min_size=len(coals), max_size=len(coals)).map(
        lambda labels: _from_labels(coals, labels)
    )
)


def _from_labels(coals, labels):
    classes = {}
    for s, k in zip(coals, labels):
        classes[k] = classes.get(k, 0) | (1 << s)
    return tuple(classes[k] for k in sorted(classes))


@given(rankings3, st.integers(0, 255))
def test_restrict_is_idempotent_and_valid(r, sub):
    sub &= ~1
    once = restrict(r, sub)
    assert restrict(once, sub) == once
    validate(once, Roster(("x", "y", "z")))
    assert domain(once) == domain(r) & sub


def test_relation_parts():
    rel = SocialRelation(3, (1, 0, -1))
    assert rel.verdict(0, 1) == Verdict.P
    assert rel.verdict(1, 0) == Verdict.INV_P
    assert rel.verdict(2, 2) == Verdict.I
    assert rel.holds(0, 2) and rel.holds(2, 0)


def test_relation_rejects_incomplete_predicate():
    with pytest.raises(ValueError):
        SocialRelation.from_predicate(3, lambda a, b: a == b)


def test_cycle_detection():
    cyc = SocialRelation(3, (1, -1, 1))  # 0>1, 2>0, 1>2
    assert cyc.has_strict_cycle() and not cyc.is_weak_order()
    assert not SocialRelation.indifference(3).has_strict_cycle()


def test_relabel_roundtrip():
    rel = SocialRelation(3, (1, 0, -1))
    sigma = (2, 0, 1)
    inverse = (1, 2, 0)
    assert rel.relabel(sigma).relabel(inverse) == rel
