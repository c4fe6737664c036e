"""Per-individual score vectors and the lexicographic comparators built on them.

All functions take a ranking (tuple of class masks, see :mod:`socrank.model`)
and an individual index.  Vectors are tuples with one entry per class, best
class first.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Sequence

from socrank.errors import LengthMismatchError
from socrank.model import Ranking, iter_bits

MAX_INDIVIDUALS = 16


def _build_member_masks(n: int) -> list[int]:
    # bit S of masks[x] is set iff coalition S contains x, for all S < 2**n
    masks = []
    width = 1 << n
    for x in range(n):
        half = 1 << x
        block = ((1 << half) - 1) << half
        period = half << 1
        m = block
        while period < width:
            m |= m << period
            period <<= 1
        masks.append(m)
    return masks


_MEMBER = _build_member_masks(MAX_INDIVIDUALS)


def member_mask(x: int) -> int:
    """Coalition-set mask of every coalition containing ``x``."""
    return _MEMBER[x]


def theta(ranking: Ranking, x: int) -> tuple[int, ...]:
    m = _MEMBER[x]
    return tuple((c & m).bit_count() for c in ranking)


def sign_theta(ranking: Ranking, x: int) -> tuple[int, ...]:
    m = _MEMBER[x]
    return tuple(1 if c & m else 0 for c in ranking)


def split_theta(ranking: Ranking, x: int) -> tuple[Fraction, ...]:
    m = _MEMBER[x]
    return tuple(
        sum((Fraction(1, s.bit_count()) for s in iter_bits(c & m)), Fraction(0))
        for c in ranking
    )


def tilde_theta(ranking: Ranking, x: int) -> tuple[int, ...]:
    """2 where ``x`` is in every coalition of the class, 1 where in some, else 0."""
    m = _MEMBER[x]
    out = []
    for c in ranking:
        hit = c & m
        out.append(2 if hit == c else (1 if hit else 0))
    return tuple(out)


def sum_score(ranking: Ranking, x: int) -> int:
    m = _MEMBER[x]
    return sum((c & m).bit_count() for c in ranking)


def sign_sum_score(ranking: Ranking, x: int) -> int:
    m = _MEMBER[x]
    return sum(1 for c in ranking if c & m)


def iis_depth(ranking: Ranking, x: int) -> int:
    """Number of leading classes all of whose coalitions contain ``x``."""
    m = _MEMBER[x]
    depth = 0
    for c in ranking:
        if c & m != c:
            break
        depth += 1
    return depth


def dual_iis_depth(ranking: Ranking, x: int) -> int:
    """:func:`iis_depth` read from the worst class upwards; larger is worse."""
    return iis_depth(ranking[::-1], x)


def class_lookup(ranking: Ranking) -> dict[int, int]:
    return {s: k for k, c in enumerate(ranking) for s in iter_bits(c)}


def cp_counts(ranking: Ranking, x: int, y: int, _index: dict | None = None) -> tuple[int, int]:
    """Ceteris-paribus comparison counts ``(C_xy, C_yx)``.

    Teammate sets ``S`` range over all subsets of the other individuals,
    the empty set included, so ``{x}`` against ``{y}`` counts.
    """
    if x == y:
        raise ValueError("cp_counts needs two distinct individuals")
    index = class_lookup(ranking) if _index is None else _index
    bx, by = 1 << x, 1 << y
    cxy = cyx = 0
    for s, k in index.items():
        if s & bx and not s & by:
            t = (s ^ bx) | by
            kt = index.get(t)
            if kt is None:
                continue
            if k < kt:
                cxy += 1
            elif k > kt:
                cyx += 1
    return cxy, cyx


class Cmp(enum.Enum):
    GREATER = 1
    EQUAL = 0
    LESS = -1


def lex_ge(a: Sequence, b: Sequence) -> Cmp:
    """Lexicographic comparison, first coordinate most significant."""
    if len(a) != len(b):
        raise LengthMismatchError(None, f"{len(a)} vs {len(b)}")
    for u, v in zip(a, b):
        if u != v:
            return Cmp.GREATER if u > v else Cmp.LESS
    return Cmp.EQUAL


def dual_lex_ge(a: Sequence, b: Sequence) -> Cmp:
    """Compare from the last coordinate; the smaller entry there wins."""
    if len(a) != len(b):
        raise LengthMismatchError(None, f"{len(a)} vs {len(b)}")
    for u, v in zip(reversed(a), reversed(b)):
        if u != v:
            return Cmp.GREATER if u < v else Cmp.LESS
    return Cmp.EQUAL


def first_difference(a: Sequence, b: Sequence, from_end: bool = False) -> int | None:
    """1-based index of the first (or last) coordinate where ``a`` and ``b`` differ."""
    idx = range(len(a) - 1, -1, -1) if from_end else range(len(a))
    for k in idx:
        if a[k] != b[k]:
            return k + 1
    return None
