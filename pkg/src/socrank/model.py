"""Core value types: rosters, coalitions, coalitional rankings, social relations.

Representation
--------------
A *coalition* is an ``int`` bitmask over roster indices (bit ``i`` set iff the
``i``-th listed individual is a member).  A *set of coalitions* is again an
``int``, this time a bitmask over coalition values: bit ``S`` is set iff the
coalition ``S`` belongs to the set.  A *coalitional ranking* is a tuple of such
class masks, best class first::

    ranking = (sigma_1, sigma_2, ..., sigma_l)

The empty tuple is the ranking over the empty domain.  Everything here is an
immutable value and hashable, which the enumeration and audit code relies on.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from socrank.errors import ValidationError

Coalition = int
CoalitionSet = int
Ranking = tuple[int, ...]

EMPTY_RANKING: Ranking = ()

_DEFAULT_NAMES = ("x", "y", "z", "w", "v", "u", "t", "s", "r", "q", "p", "o")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def coalitions_of(class_mask: CoalitionSet) -> list[Coalition]:
    return list(iter_bits(class_mask))


def coalition_set(coalitions: Iterable[Coalition]) -> CoalitionSet:
    mask = 0
    for s in coalitions:
        mask |= 1 << s
    return mask


@dataclass(frozen=True)
class Roster:
    """The individuals ``X`` together with the tie-break order.

    ``tiebreak`` lists the individuals from highest to lowest priority; it
    defaults to the listing order.
    """

    individuals: tuple[str, ...]
    tiebreak: tuple[str, ...] | None = None
    _index: dict = field(init=False, repr=False, compare=False)
    _priority: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        names = tuple(str(n) for n in self.individuals)
        object.__setattr__(self, "individuals", names)
        if len(names) < 3:
            raise ValueError(f"a roster needs at least 3 individuals, got {len(names)}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate individual in roster {names}")
        order = names if self.tiebreak is None else tuple(str(n) for n in self.tiebreak)
        if sorted(order) != sorted(names):
            raise ValueError("tie-break order must list exactly the roster members")
        object.__setattr__(self, "tiebreak", order)
        index = {name: i for i, name in enumerate(names)}
        object.__setattr__(self, "_index", index)
        priority = [0] * len(names)
        for rank, name in enumerate(order):
            priority[index[name]] = rank
        object.__setattr__(self, "_priority", tuple(priority))

    @classmethod
    def default(cls, size: int) -> "Roster":
        if size <= len(_DEFAULT_NAMES):
            return cls(_DEFAULT_NAMES[:size])
        return cls(tuple(f"i{k}" for k in range(1, size + 1)))

    @property
    def n(self) -> int:
        return len(self.individuals)

    @property
    def full(self) -> Coalition:
        return (1 << self.n) - 1

    @property
    def all_coalitions_mask(self) -> CoalitionSet:
        """Bitmask of every nonempty coalition."""
        return ((1 << (1 << self.n)) - 1) & ~1

    def index(self, name: str) -> int:
        try:
            return self._index[str(name)]
        except KeyError:
            raise ValidationError("FOREIGN_MEMBER", f"{name!r} is not in the roster") from None

    def name(self, i: int) -> str:
        return self.individuals[i]

    def priority(self, i: int) -> int:
        """Rank of individual ``i`` in the tie-break order (0 is the top)."""
        return self._priority[i]

    def beats(self, i: int, j: int) -> bool:
        """Whether ``i`` precedes ``j`` in the tie-break order."""
        return self._priority[i] < self._priority[j]

    def coalition(self, *names: str) -> Coalition:
        if len(names) == 1 and not isinstance(names[0], str):
            names = tuple(names[0])
        if not names:
            raise ValidationError("EMPTY_COALITION", "coalitions must be nonempty")
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return mask

    def members(self, s: Coalition) -> tuple[str, ...]:
        return tuple(self.individuals[i] for i in iter_bits(s))

    def ranking(self, classes: Sequence[Sequence[Iterable[str] | str]]) -> Ranking:
        """Build a ranking from nested name lists, e.g. ``[["xy", "x"], ["z"]]``.

        A coalition may be given as an iterable of names or as a string whose
        characters are single-letter names.
        """
        built = []
        seen = 0
        for cls_ in classes:
            mask = 0
            for members in cls_:
                s = self.coalition(*members)
                if (seen | mask) >> s & 1:
                    raise ValidationError(
                        "DUPLICATE_COALITION", f"{{{','.join(self.members(s))}}} listed twice"
                    )
                mask |= 1 << s
            if not mask:
                raise ValidationError("EMPTY_CLASS", f"class {len(built) + 1} is empty")
            seen |= mask
            built.append(mask)
        return tuple(built)


def domain(ranking: Ranking) -> CoalitionSet:
    mask = 0
    for c in ranking:
        mask |= c
    return mask


def domain_size(ranking: Ranking) -> int:
    return domain(ranking).bit_count()


def validate(ranking: Ranking, roster: Roster) -> None:
    """Raise :class:`ValidationError` unless ``ranking`` is a weak order on a
    set of nonempty coalitions of ``roster``."""
    seen = 0
    limit = 1 << (1 << roster.n)
    for k, c in enumerate(ranking, start=1):
        if not isinstance(c, int) or c < 0:
            raise ValidationError("EMPTY_CLASS", f"class {k} is not a coalition set")
        if c == 0:
            raise ValidationError("EMPTY_CLASS", f"class {k} is empty")
        if c & 1:
            raise ValidationError("EMPTY_COALITION", f"class {k} contains the empty coalition")
        if c >= limit:
            raise ValidationError("FOREIGN_MEMBER", f"class {k} has a coalition outside the roster")
        if seen & c:
            raise ValidationError("DUPLICATE_COALITION", f"class {k} repeats a coalition")
        seen |= c


def class_index(ranking: Ranking, s: Coalition) -> int | None:
    """1-based index of the class holding ``s``, or ``None`` outside the domain."""
    bit = 1 << s
    for k, c in enumerate(ranking, start=1):
        if c & bit:
            return k
    return None


def restrict(ranking: Ranking, sub: CoalitionSet | Iterable[Coalition]) -> Ranking:
    if not isinstance(sub, int):
        sub = coalition_set(sub)
    return tuple(c & sub for c in ranking if c & sub)


def reverse(ranking: Ranking) -> Ranking:
    return ranking[::-1]


class Verdict(enum.IntEnum):
    """Pairwise outcome of a social relation for an ordered pair ``(x, y)``."""

    P = 1
    I = 0  # noqa: E741
    INV_P = -1

    def flip(self) -> "Verdict":
        return Verdict(-self.value)


@lru_cache(maxsize=None)
def pairs_of(n: int) -> tuple[tuple[int, int], ...]:
    """Unordered index pairs ``(i, j)`` with ``i < j`` in the canonical order."""
    return tuple(itertools.combinations(range(n), 2))


@lru_cache(maxsize=None)
def _pair_slot(n: int) -> dict:
    return {p: k for k, p in enumerate(pairs_of(n))}


@dataclass(frozen=True)
class SocialRelation:
    """A reflexive, complete relation on the roster, stored pairwise.

    ``verdicts[k]`` is +1, 0 or -1 for the k-th pair ``(i, j)`` of
    :func:`pairs_of`, meaning ``i`` strictly beats ``j``, a tie, or ``j``
    strictly beats ``i``.  Transitivity is not assumed.
    """

    n: int
    verdicts: tuple[int, ...]

    def __post_init__(self):
        if len(self.verdicts) != len(pairs_of(self.n)):
            raise ValueError("one verdict per unordered pair is required")
        if any(v not in (-1, 0, 1) for v in self.verdicts):
            raise ValueError("verdicts must be -1, 0 or 1")

    @classmethod
    def from_predicate(cls, n: int, holds) -> "SocialRelation":
        """Build from a complete predicate ``holds(x, y)`` meaning ``x R y``."""
        out = []
        for i, j in pairs_of(n):
            a, b = holds(i, j), holds(j, i)
            if not (a or b):
                raise ValueError(f"relation is not complete on pair ({i}, {j})")
            out.append(0 if a and b else (1 if a else -1))
        return cls(n, tuple(out))

    @classmethod
    def indifference(cls, n: int) -> "SocialRelation":
        return cls(n, (0,) * len(pairs_of(n)))

    def verdict(self, x: int, y: int) -> Verdict:
        if x == y:
            return Verdict.I
        if x < y:
            return Verdict(self.verdicts[_pair_slot(self.n)[(x, y)]])
        return Verdict(-self.verdicts[_pair_slot(self.n)[(y, x)]])

    def holds(self, x: int, y: int) -> bool:
        """``x R y``."""
        return self.verdict(x, y) != Verdict.INV_P

    def as_pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (x, y) for x in range(self.n) for y in range(self.n) if self.holds(x, y)
        )

    def is_weak_order(self) -> bool:
        n = self.n
        r = [[self.holds(x, y) for y in range(n)] for x in range(n)]
        return all(
            not (r[x][y] and r[y][z]) or r[x][z]
            for x in range(n)
            for y in range(n)
            for z in range(n)
        )

    def has_strict_cycle(self) -> bool:
        """Whether the asymmetric part contains a directed cycle."""
        n = self.n
        succ = [[y for y in range(n) if self.verdict(x, y) == Verdict.P] for x in range(n)]
        state = [0] * n

        def visit(v):
            state[v] = 1
            for w in succ[v]:
                if state[w] == 1 or (state[w] == 0 and visit(w)):
                    return True
            state[v] = 2
            return False

        return any(state[v] == 0 and visit(v) for v in range(n))

    def ordered_classes(self) -> list[list[int]]:
        """Indifference classes, best first.  Only meaningful for weak orders."""
        if not self.is_weak_order():
            raise ValueError("relation is not transitive")
        wins = [sum(self.verdict(x, y) == Verdict.P for y in range(self.n)) for x in range(self.n)]
        classes: dict[int, list[int]] = {}
        for x in range(self.n):
            classes.setdefault(wins[x], []).append(x)
        return [classes[w] for w in sorted(classes, reverse=True)]

    def relabel(self, sigma: Sequence[int]) -> "SocialRelation":
        """The image relation ``{(sigma(x), sigma(y)) : x R y}``."""
        image = {}
        for x in range(self.n):
            for y in range(self.n):
                image[(sigma[x], sigma[y])] = self.holds(x, y)
        return SocialRelation.from_predicate(self.n, lambda a, b: image[(a, b)])
