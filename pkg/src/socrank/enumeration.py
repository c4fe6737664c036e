"""Deterministic generators for everything the axioms quantify over."""

from __future__ import annotations

import itertools
from math import comb, factorial
from typing import Iterator, Sequence

from socrank.model import Coalition, CoalitionSet, Ranking, Roster, iter_bits


def all_coalitions(roster: Roster | int) -> Iterator[Coalition]:
    """Nonempty coalitions in increasing bitmask order.

    Bit ``i`` stands for the ``i``-th listed individual, so the first coalition
    is the singleton of the first-listed individual.
    """
    n = roster if isinstance(roster, int) else roster.n
    return iter(range(1, 1 << n))


def weak_orders(domain: CoalitionSet, max_classes: int | None = None) -> Iterator[Ranking]:
    """Every ordered set partition of the coalitions in ``domain``.

    The first class runs over the nonempty submasks of ``domain`` from the
    largest value down, so a single class comes first.  ``max_classes`` prunes
    partitions with too many blocks.
    """
    if not domain:
        yield ()
        return
    if max_classes is not None and max_classes <= 0:
        return
    left = None if max_classes is None else max_classes - 1
    sub = domain
    while sub:
        rest_domain = domain & ~sub
        if rest_domain and left == 0:
            sub = (sub - 1) & domain
            continue
        for rest in weak_orders(rest_domain, left):
            yield (sub,) + rest
        sub = (sub - 1) & domain


def fubini(n: int) -> int:
    """Number of weak orders on an ``n``-element set."""
    a = [1]
    for m in range(1, n + 1):
        a.append(sum(comb(m, k) * a[m - k] for k in range(1, m + 1)))
    return a[n]


def domains(n_individuals: int, max_domain: int, min_domain: int = 0) -> Iterator[CoalitionSet]:
    """Coalition sets of size ``min_domain..max_domain``, by size then lexicographically."""
    coalitions = range(1, 1 << n_individuals)
    for d in range(min_domain, min(max_domain, len(coalitions)) + 1):
        for combo in itertools.combinations(coalitions, d):
            mask = 0
            for s in combo:
                mask |= 1 << s
            yield mask


def all_rankings(
    roster: Roster | int, max_domain: int, max_classes: int | None = None, min_domain: int = 0
) -> Iterator[Ranking]:
    """All rankings with ``|D| <= max_domain`` and at most ``max_classes`` classes."""
    n = roster if isinstance(roster, int) else roster.n
    for dom in domains(n, max_domain, min_domain):
        yield from weak_orders(dom, max_classes)


def count_rankings(n_individuals: int, max_domain: int, max_classes: int | None = None) -> int:
    """Closed-form size of :func:`all_rankings` (exact when ``max_classes`` is None)."""
    total_coalitions = (1 << n_individuals) - 1
    total = 0
    for d in range(0, min(max_domain, total_coalitions) + 1):
        if max_classes is None:
            per = fubini(d)
        else:
            per = sum(_surjections(d, k) for k in range(0, max_classes + 1))
        total += comb(total_coalitions, d) * per
    return total


def _surjections(d: int, k: int) -> int:
    if d == 0:
        return 1 if k == 0 else 0
    return sum((-1) ** j * comb(k, j) * (k - j) ** d for j in range(k + 1))


def roster_permutations(roster: Roster | int) -> Iterator[tuple[int, ...]]:
    """All permutations of roster indices, identity first."""
    n = roster if isinstance(roster, int) else roster.n
    return itertools.permutations(range(n))


def sigma_on_coalition(s: Coalition, sigma: Sequence[int]) -> Coalition:
    out = 0
    for i in iter_bits(s):
        out |= 1 << sigma[i]
    return out


def apply_sigma(ranking: Ranking, sigma: Sequence[int]) -> Ranking:
    """Relabel individuals: coalition ``S`` becomes ``sigma(S)``."""
    return tuple(
        _map_class(c, lambda s: sigma_on_coalition(s, sigma)) for c in ranking
    )


def apply_pi(ranking: Ranking, pi: dict[int, int] | Sequence[int]) -> Ranking:
    """Move each coalition ``S`` to ``pi[S]``; ``pi`` is a bijection on coalitions."""
    return tuple(_map_class(c, lambda s: pi[s]) for c in ranking)


def _map_class(c: CoalitionSet, f) -> CoalitionSet:
    out = 0
    for s in iter_bits(c):
        out |= 1 << f(s)
    return out


def membership_cells(n: int, x: int, y: int) -> tuple[list[int], ...]:
    """Coalitions split by membership of ``x`` and ``y``: both, only x, only y, neither."""
    cells: tuple[list[int], ...] = ([], [], [], [])
    bx, by = 1 << x, 1 << y
    for s in range(1, 1 << n):
        hx, hy = bool(s & bx), bool(s & by)
        cells[0 if hx and hy else 1 if hx else 2 if hy else 3].append(s)
    return cells


def xy_invariant_permutations(roster: Roster | int, x: int, y: int) -> Iterator[tuple[int, ...]]:
    """Coalition permutations preserving membership of ``x`` and of ``y``.

    Each is returned as a tuple ``pi`` indexed by coalition value (entry 0 is
    unused and fixed).  The identity comes first.
    """
    if x == y:
        raise ValueError("x and y must differ")
    n = roster if isinstance(roster, int) else roster.n
    cells = membership_cells(n, x, y)
    for images in itertools.product(*(itertools.permutations(c) for c in cells)):
        pi = list(range(1 << n))
        for cell, image in zip(cells, images):
            for s, t in zip(cell, image):
                pi[s] = t
        yield tuple(pi)


def count_xy_invariant(n: int) -> int:
    sizes = [len(c) for c in membership_cells(n, 0, 1)]
    out = 1
    for k in sizes:
        out *= factorial(k)
    return out
