import pytest

from oracles import brute_force_sums
from socrank import sums as sm
from socrank.errors import NotDisjointError
from socrank.fixtures import example2
from socrank.model import Roster, restrict, reverse, domain

X4 = Roster.default(4)


def _chain(names_per_class):
    return X4.ranking([[n] for n in names_per_class]) if names_per_class else ()


def test_example2_sums():
    e = example2()
    assert sm.concat_sum(e["r1"], e["r2"]) == e["concat"]
    assert sm.top_aligned_sum(e["r1"], e["r2"]) == e["top"]
    assert sm.bottom_aligned_sum(e["r1"], e["r2"]) == e["bottom"]


def test_disjointness(ex1):
    _, r1, r2 = ex1
    assert sm.are_disjoint(r1, r2)
    assert not sm.are_disjoint(r1, r1)
    assert sm.are_disjoint(r1, ())
    for f in (sm.concat_sum, sm.top_aligned_sum, sm.bottom_aligned_sum):
        with pytest.raises(NotDisjointError):
            f(r1, r1)
    with pytest.raises(NotDisjointError):
        list(sm.enumerate_sums(r1, r1))


def test_empty_side_is_neutral(ex1):
    _, r1, _ = ex1
    for f in (sm.concat_sum, sm.top_aligned_sum, sm.bottom_aligned_sum):
        assert f(r1, ()) == r1 and f((), r1) == r1
    assert list(sm.enumerate_sums(r1, ())) == [r1]


def test_single_classes_give_three_sums():
    a, b = X4.ranking([["x"]]), X4.ranking([["y"]])
    got = list(sm.enumerate_sums(a, b))
    assert len(got) == 3 and len(set(got)) == 3
    assert sm.bottom_aligned_sum(a, b) == sm.top_aligned_sum(a, b)


LEFT = ["x", "y", "z"]
RIGHT = ["w", "xy", "xz"]


@pytest.mark.parametrize("l", [0, 1, 2, 3])
@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_enumeration_matches_filter_and_delannoy(l, m):
    r1, r2 = _chain(LEFT[:l]), _chain(RIGHT[:m])
    got = list(sm.enumerate_sums(r1, r2))
    assert len(got) == len(set(got)) == sm.delannoy(l, m)
    assert set(got) == brute_force_sums(r1, r2)
    for t in got:
        assert restrict(t, domain(r1)) == r1 and restrict(t, domain(r2)) == r2
    for named in (sm.concat_sum, sm.top_aligned_sum, sm.bottom_aligned_sum):
        assert named(r1, r2) in got


def test_multi_coalition_classes_against_filter():
    r1 = X4.ranking([["x", "y"], ["z"]])
    r2 = X4.ranking([["xy"], ["w", "zw"]])
    assert set(sm.enumerate_sums(r1, r2)) == brute_force_sums(r1, r2)


def test_delannoy_values():
    assert [sm.delannoy(*p) for p in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)]] == [3, 5, 13, 25, 63]


def test_bottom_is_mirrored_top():
    r1, r2 = _chain(LEFT), _chain(RIGHT[:2])
    assert sm.bottom_aligned_sum(r1, r2) == reverse(sm.top_aligned_sum(reverse(r1), reverse(r2)))


def test_is_sum_of():
    r1, r2 = _chain(LEFT[:2]), _chain(RIGHT[:1])
    assert sm.is_sum_of(sm.concat_sum(r1, r2), r1, r2)
    assert not sm.is_sum_of(r1, r1, r2)
    assert not sm.is_sum_of(sm.concat_sum(r2, r1)[::-1], r1, r2)
