"""Registry of social ranking solutions (SRSs).

Every solution is defined pairwise.  Most of them rank individuals by a
per-individual key compared with Python's tuple order, so the relation of a
whole ranking costs one key per individual; the rest (CP majority and the two
existence-sensitive sign lex-cel variants) carry an explicit pairwise rule.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Any, Callable

from socrank import scores as sc
from socrank.errors import UnknownSrsError
from socrank.model import Ranking, Roster, SocialRelation, Verdict, pairs_of

KeyFn = Callable[[Ranking, int, Roster], Any]
PairFn = Callable[[Ranking, int, int, Roster], int]


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


@dataclass(frozen=True)
class Srs:
    name: str
    title: str
    key: KeyFn | None = None
    pairwise: PairFn | None = None
    relation_fn: Callable[[Ranking, Roster], tuple[int, ...]] | None = field(
        default=None, repr=False
    )

    def compare(self, ranking: Ranking, x: int, y: int, roster: Roster) -> int:
        if x == y:
            return 0
        if self.key is not None:
            return _cmp(self.key(ranking, x, roster), self.key(ranking, y, roster))
        return self.pairwise(ranking, x, y, roster)

    def relation(self, ranking: Ranking, roster: Roster) -> tuple[int, ...]:
        """Pair verdicts in :func:`socrank.model.pairs_of` order."""
        if self.relation_fn is not None:
            return self.relation_fn(ranking, roster)
        pairs = pairs_of(roster.n)
        if self.key is not None:
            key = self.key
            ks = [key(ranking, i, roster) for i in range(roster.n)]
            return tuple([(ks[i] > ks[j]) - (ks[i] < ks[j]) for i, j in pairs])
        return tuple([self.pairwise(ranking, i, j, roster) for i, j in pairs])


# --- keys -------------------------------------------------------------------


def _top_count(r, x, _):
    return (r[0] & sc.member_mask(x)).bit_count() if r else 0


def _top_sign(r, x, _):
    return 1 if r and r[0] & sc.member_mask(x) else 0


def _bottom_count(r, x, _):
    return -((r[-1] & sc.member_mask(x)).bit_count()) if r else 0


def _split_top(r, x, _):
    return sc.split_theta(r[:1], x)[0] if r else Fraction(0)


def _dual_lex_key(vec):
    # a >=^DL b  <=>  this key of a >= this key of b (tuple order)
    return tuple(-v for v in reversed(vec))


def _tiebreak(x, y, roster) -> int:
    return 1 if roster.beats(x, y) else -1


def _slne(r, x, y, roster):
    a, b = sc.sign_theta(r, x), sc.sign_theta(r, y)
    if slne_clause(a, b) == "a":
        return _tiebreak(x, y, roster)
    return _cmp(a, b)


def _slneh(r, x, y, roster):
    a, b = sc.sign_theta(r, x), sc.sign_theta(r, y)
    if slneh_clause(a, b) == "a":
        return _tiebreak(x, y, roster)
    return _cmp(a, b)


def slne_clause(a, b) -> str:
    """'a' when the presence vectors coincide and share an absence, else 'b'."""
    return "a" if a == b and 0 in a else "b"


def slneh_clause(a, b) -> str:
    """'a' when the common run of joint presences ends in a joint absence."""
    for u, v in zip(a, b):
        if u == v == 1:
            continue
        return "a" if u == v == 0 else "b"
    return "b"


def _cpm_pair(r, x, y, _roster):
    cxy, cyx = sc.cp_counts(r, x, y)
    return _cmp(cxy, cyx)


@lru_cache(maxsize=None)
def _cp_pairs(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    # for each pair (x, y): the coalition pairs (S+x, S+y) over teammate sets S
    out = []
    for x, y in pairs_of(n):
        others = [i for i in range(n) if i not in (x, y)]
        row = []
        for k in range(len(others) + 1):
            for combo in itertools.combinations(others, k):
                s = sum(1 << i for i in combo)
                row.append((s | 1 << x, s | 1 << y))
        out.append(tuple(row))
    return tuple(out)


def _cpm_relation(r, roster):
    place = [0] * (1 << roster.n)
    for k, c in enumerate(r, start=1):
        while c:
            low = c & -c
            place[low.bit_length() - 1] = k
            c ^= low
    out = []
    for row in _cp_pairs(roster.n):
        balance = 0
        for a, b in row:
            ka = place[a]
            if ka:
                kb = place[b]
                if kb:
                    balance += (ka < kb) - (ka > kb)
        out.append((balance > 0) - (balance < 0))
    return tuple(out)


_REGISTRY: dict[str, Srs] = {}


def _register(srs: Srs) -> None:
    _REGISTRY[srs.name] = srs


_register(Srs("L", "lex-cel", key=lambda r, x, _: sc.theta(r, x)))
_register(Srs("SL", "sign lex-cel", key=lambda r, x, _: sc.sign_theta(r, x)))
_register(Srs("P", "plurality", key=_top_count))
_register(Srs("SP", "sign plurality", key=_top_sign))
_register(Srs("AP", "anti-plurality", key=_bottom_count))
_register(Srs("CPM", "ceteris paribus majority", pairwise=_cpm_pair, relation_fn=_cpm_relation))
_register(Srs("IIS", "intersection initial segment", key=lambda r, x, _: sc.iis_depth(r, x)))
_register(
    Srs("DSL", "dual sign lex-cel", key=lambda r, x, _: _dual_lex_key(sc.sign_theta(r, x)))
)
_register(
    Srs("IDSL", "inverse dual sign lex-cel", key=lambda r, x, _: sc.sign_theta(r, x)[::-1])
)
_register(Srs("SPLIT_L", "split lex-cel", key=lambda r, x, _: sc.split_theta(r, x)))
_register(
    Srs(
        "L_TB",
        "lex-cel with tie-breaking",
        key=lambda r, x, roster: (sc.theta(r, x), -roster.priority(x)),
    )
)
_register(Srs("SLNE", "sign lex-cel, attention to non-existence", pairwise=_slne))
_register(
    Srs("SLNEH", "sign lex-cel, attention to non-existence in higher classes", pairwise=_slneh)
)
_register(
    Srs("SLUN", "sign lex-cel, precedence on unanimity", key=lambda r, x, _: sc.tilde_theta(r, x))
)
_register(Srs("SUM", "sum rule", key=lambda r, x, _: sc.sum_score(r, x)))
_register(Srs("SSUM", "sign sum rule", key=lambda r, x, _: sc.sign_sum_score(r, x)))
_register(
    Srs(
        "SUM_L",
        "sum rule with lex-cel tie-breaking",
        key=lambda r, x, _: (sc.sum_score(r, x), sc.theta(r, x)),
    )
)
_register(
    Srs(
        "SSUM_SL",
        "sign sum rule with sign lex-cel tie-breaking",
        key=lambda r, x, _: (sc.sign_sum_score(r, x), sc.sign_theta(r, x)),
    )
)
_register(Srs("SPLIT_P", "split plurality", key=_split_top))
_register(
    Srs(
        "P_TB",
        "plurality with tie-breaking",
        key=lambda r, x, roster: (_top_count(r, x, roster), -roster.priority(x)),
    )
)
_register(Srs("CONST_X", "constant full indifference", key=lambda r, x, _: 0))
_register(Srs("DUAL_IIS", "dual intersection initial segment", key=lambda r, x, _: -sc.dual_iis_depth(r, x)))

SRS_NAMES: tuple[str, ...] = tuple(_REGISTRY)
MAIN_SRS = ("L", "SL", "P", "AP", "IIS", "CPM")


def get_srs(name: str | Srs) -> Srs:
    if isinstance(name, Srs):
        return name
    try:
        return _REGISTRY[str(name).upper()]
    except KeyError:
        raise UnknownSrsError(None, f"unknown SRS {name!r}") from None


def compare(srs: str | Srs, roster: Roster, ranking: Ranking, x: int, y: int) -> Verdict:
    return Verdict(get_srs(srs).compare(ranking, x, y, roster))


def apply(srs: str | Srs, roster: Roster, ranking: Ranking) -> SocialRelation:
    return SocialRelation(roster.n, get_srs(srs).relation(ranking, roster))


@dataclass
class Explanation:
    srs: str
    x: int
    y: int
    verdict: Verdict
    consulted: dict[str, tuple[Any, Any]]
    first_difference: int | None = None
    tiebreak_used: bool = False
    note: str = ""

    def as_dict(self, roster: Roster) -> dict:
        return {
            "srs": self.srs,
            "pair": [roster.name(self.x), roster.name(self.y)],
            "verdict": self.verdict.name,
            "consulted": {k: [_plain(a), _plain(b)] for k, (a, b) in self.consulted.items()},
            "first_difference": self.first_difference,
            "tiebreak_used": self.tiebreak_used,
            "note": self.note,
        }


def _plain(v):
    if isinstance(v, tuple):
        return [_plain(u) for u in v]
    if isinstance(v, Fraction):
        return str(v)
    return v


_VECTOR_OF = {
    "L": ("theta", sc.theta),
    "L_TB": ("theta", sc.theta),
    "SUM_L": ("theta", sc.theta),
    "SL": ("sign_theta", sc.sign_theta),
    "SSUM_SL": ("sign_theta", sc.sign_theta),
    "SLNE": ("sign_theta", sc.sign_theta),
    "SLNEH": ("sign_theta", sc.sign_theta),
    "DSL": ("sign_theta", sc.sign_theta),
    "IDSL": ("sign_theta", sc.sign_theta),
    "SLUN": ("tilde_theta", sc.tilde_theta),
    "SPLIT_L": ("split_theta", sc.split_theta),
    "P": ("theta", sc.theta),
    "P_TB": ("theta", sc.theta),
    "SP": ("sign_theta", sc.sign_theta),
    "AP": ("theta", sc.theta),
    "SPLIT_P": ("split_theta", sc.split_theta),
}


def explain(srs: str | Srs, roster: Roster, ranking: Ranking, x: int, y: int) -> Explanation:
    """Structured account of which scores decided ``compare(srs, ..., x, y)``."""
    s = get_srs(srs)
    verdict = Verdict(s.compare(ranking, x, y, roster))
    ex = Explanation(s.name, x, y, verdict, {})
    if x == y:
        ex.note = "reflexive pair"
        return ex
    name = s.name
    if name in _VECTOR_OF:
        label, fn = _VECTOR_OF[name]
        a, b = fn(ranking, x), fn(ranking, y)
        ex.consulted[label] = (a, b)
        if name in ("P", "P_TB", "SP", "SPLIT_P"):
            ex.first_difference = 1 if a and a[0] != b[0] else None
            base_tie = not a or a[0] == b[0]
        elif name == "AP":
            ex.first_difference = len(a) if a and a[-1] != b[-1] else None
            base_tie = not a or a[-1] == b[-1]
        else:
            ex.first_difference = sc.first_difference(a, b, from_end=name in ("DSL", "IDSL"))
            base_tie = a == b
        if name in ("SUM_L", "SSUM_SL"):
            total = sc.sum_score if name == "SUM_L" else sc.sign_sum_score
            ex.consulted["total"] = (total(ranking, x), total(ranking, y))
            if ex.consulted["total"][0] != ex.consulted["total"][1]:
                ex.note = "decided by totals"
        if name in ("L_TB", "P_TB"):
            ex.tiebreak_used = base_tie
        elif name == "SLNE":
            ex.tiebreak_used = slne_clause(a, b) == "a"
        elif name == "SLNEH":
            ex.tiebreak_used = slneh_clause(a, b) == "a"
    elif name == "CPM":
        ex.consulted["cp_counts"] = sc.cp_counts(ranking, x, y)
    elif name in ("IIS", "DUAL_IIS"):
        fn = sc.iis_depth if name == "IIS" else sc.dual_iis_depth
        ex.consulted["depth"] = (fn(ranking, x), fn(ranking, y))
    elif name in ("SUM", "SSUM"):
        fn = sc.sum_score if name == "SUM" else sc.sign_sum_score
        ex.consulted["total"] = (fn(ranking, x), fn(ranking, y))
    elif name == "CONST_X":
        ex.note = "constant rule"
    if ex.tiebreak_used:
        ex.note = "tie broken by the tie-break order"
    return ex
