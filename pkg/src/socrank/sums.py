"""Sums of disjoint coalitional rankings.

A sum of ``r1`` and ``r2`` is any weak order on the union of their domains
whose restriction to each part gives back that part.  Concatenation, the
top-aligned sum and the bottom-aligned sum are the three canonical ones.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from socrank.errors import NotDisjointError
from socrank.model import Ranking, domain, restrict


def are_disjoint(r1: Ranking, r2: Ranking) -> bool:
    return not (domain(r1) & domain(r2))


def _require_disjoint(r1: Ranking, r2: Ranking) -> None:
    if not are_disjoint(r1, r2):
        raise NotDisjointError(None, "the two rankings share a coalition")


def concat_sum(r1: Ranking, r2: Ranking) -> Ranking:
    """Every coalition of ``r1`` strictly above every coalition of ``r2``."""
    _require_disjoint(r1, r2)
    return tuple(r1) + tuple(r2)


def top_aligned_sum(r1: Ranking, r2: Ranking) -> Ranking:
    _require_disjoint(r1, r2)
    k = min(len(r1), len(r2))
    merged = tuple(a | b for a, b in zip(r1, r2))
    return merged + tuple(r1[k:]) + tuple(r2[k:])


def bottom_aligned_sum(r1: Ranking, r2: Ranking) -> Ranking:
    _require_disjoint(r1, r2)
    return top_aligned_sum(r1[::-1], r2[::-1])[::-1]


def is_sum_of(ranking: Ranking, r1: Ranking, r2: Ranking) -> bool:
    """Whether ``ranking`` lies in the sum set of the disjoint pair."""
    if domain(ranking) != domain(r1) | domain(r2):
        return False
    return restrict(ranking, domain(r1)) == tuple(r1) and restrict(
        ranking, domain(r2)
    ) == tuple(r2)


def enumerate_sums(r1: Ranking, r2: Ranking) -> Iterator[Ranking]:
    """Lazily yield every sum of the disjoint pair, each exactly once.

    Each step takes the next class of ``r1`` alone, the next class of ``r2``
    alone, or both merged, so the count is the Delannoy number ``D(l, m)``.
    """
    _require_disjoint(r1, r2)
    r1, r2 = tuple(r1), tuple(r2)

    def rec(i: int, j: int) -> Iterator[Ranking]:
        if i == len(r1):
            yield r2[j:]
            return
        if j == len(r2):
            yield r1[i:]
            return
        for rest in rec(i + 1, j):
            yield (r1[i],) + rest
        for rest in rec(i, j + 1):
            yield (r2[j],) + rest
        for rest in rec(i + 1, j + 1):
            yield (r1[i] | r2[j],) + rest

    return rec(0, 0)


@lru_cache(maxsize=None)
def delannoy(m: int, n: int) -> int:
    if m == 0 or n == 0:
        return 1
    return delannoy(m - 1, n) + delannoy(m, n - 1) + delannoy(m - 1, n - 1)
