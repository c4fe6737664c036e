"""Axioms as instance checks and as bounded counterexample searches.

Each axiom has an instance-level check that works on explicit inputs and an
auditor that enumerates the inputs the axiom quantifies over, within a
:class:`SearchBounds`.  The auditor's first violation is returned as a
:class:`Witness`; feeding it to :func:`replay` runs the instance check again
and must give back an identical witness.

Caps in the bounds apply to *every* ranking in an instance, including the sum
(or decomposed, extended) ranking, so a pair of parts is only considered when
their combination also fits.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from math import comb, factorial
from typing import Any, Iterable, Iterator, Sequence

from socrank import enumeration as en
from socrank import sums as sm
from socrank.errors import BoundsTooLargeError, NotASumError, UnknownAxiomError
from socrank.model import (
    Ranking,
    Roster,
    Verdict,
    domain,
    iter_bits,
    pairs_of,
)
from socrank.notation import render_coalition, render_ranking
from socrank.solutions import Srs, get_srs

CONSISTENCY_CLAUSES: dict[str, tuple[int, ...]] = {
    "CON": (1, 2, 3, 4),
    "CCON": (1, 2, 3, 4),
    "TCON": (1, 2, 3, 4),
    "BCON": (1, 2, 3, 4),
    "II_CCON": (1,),
    "IP_CCON": (2,),
    "PI_CCON": (3,),
    "PP_CCON": (4,),
}
CONCAT_AXIOMS = ("CCON", "II_CCON", "IP_CCON", "PI_CCON", "PP_CCON")
AXIOM_NAMES: tuple[str, ...] = (
    "CON",
    "CCON",
    "TCON",
    "BCON",
    "II_CCON",
    "IP_CCON",
    "PI_CCON",
    "PP_CCON",
    "NT",
    "WCA",
    "IDWS",
    "IAWS",
    "TO",
    "AIAW",
    "WUVIP",
)
SUM_KIND = {"CON": "any", "TCON": "top", "BCON": "bottom"}
SUM_KIND.update({a: "concat" for a in CONCAT_AXIOMS})

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"
PASS = "pass_up_to_bounds"
VIOLATED = "violated"
DEFAULT_BUDGET = 50_000_000


def get_axiom(name: str) -> str:
    key = str(name).upper().replace("-", "_")
    if key not in AXIOM_NAMES:
        raise UnknownAxiomError(None, f"unknown axiom {name!r}")
    return key


@dataclass(frozen=True)
class SearchBounds:
    """Limits of a bounded audit.

    ``max_domain`` caps ``|D|`` and ``max_classes`` caps the class count of
    every ranking in an instance.  In sampled mode ``trials`` random instances
    are drawn from a generator seeded with ``seed``.
    """

    roster_size: int = 3
    max_domain: int = 3
    max_classes: int | None = None
    mode: str = EXHAUSTIVE
    seed: int = 0
    trials: int = 10_000
    budget: int = DEFAULT_BUDGET
    tiebreak: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.roster_size < 3:
            raise ValueError("roster_size must be at least 3")
        if self.max_domain < 1:
            raise ValueError("max_domain must be at least 1")
        if self.max_classes is not None and self.max_classes < 1:
            raise ValueError("max_classes must be at least 1")
        if self.mode not in (EXHAUSTIVE, SAMPLED):
            raise ValueError(f"mode must be {EXHAUSTIVE!r} or {SAMPLED!r}")
        if self.trials < 1:
            raise ValueError("trials must be positive")

    def roster(self) -> Roster:
        base = Roster.default(self.roster_size)
        if self.tiebreak is None:
            return base
        return Roster(base.individuals, self.tiebreak)

    @property
    def coalition_count(self) -> int:
        return (1 << self.roster_size) - 1

    def fits(self, ranking: Ranking) -> bool:
        if self.max_classes is not None and len(ranking) > self.max_classes:
            return False
        return domain(ranking).bit_count() <= self.max_domain

    def as_dict(self) -> dict:
        d = asdict(self)
        d["tiebreak"] = list(self.tiebreak) if self.tiebreak else None
        return d


@dataclass(frozen=True)
class Witness:
    """A concrete violation: the inputs, the offending pair and the verdicts seen."""

    srs: str
    axiom: str
    inputs: dict[str, Any]
    pair: tuple[int, int]
    observed: dict[str, int]
    clause: int | str | None
    roster: Roster

    def as_dict(self) -> dict:
        r = self.roster
        ins: dict[str, Any] = {}
        for k, v in self.inputs.items():
            if k == "sigma":
                ins[k] = {r.name(i): r.name(v[i]) for i in range(r.n)}
            elif k == "pi":
                ins[k] = {
                    render_coalition(s, r): render_coalition(v[s], r)
                    for s in range(1, 1 << r.n)
                    if v[s] != s
                }
            elif isinstance(v, tuple):
                ins[k] = render_ranking(v, r)
            else:
                ins[k] = v
        return {
            "srs": self.srs,
            "axiom": self.axiom,
            "roster": list(r.individuals),
            "inputs": ins,
            "pair": [r.name(self.pair[0]), r.name(self.pair[1])],
            "observed": {k: Verdict(v).name for k, v in self.observed.items()},
            "clause": self.clause,
        }

    def describe(self) -> str:
        d = self.as_dict()
        parts = [f"{self.srs} violates {self.axiom} on pair ({d['pair'][0]},{d['pair'][1]})"]
        for k, v in d["inputs"].items():
            parts.append(f"  {k}: {v}")
        parts.append("  observed: " + ", ".join(f"{k}={v}" for k, v in d["observed"].items()))
        if self.clause is not None:
            parts.append(f"  clause: {self.clause}")
        return "\n".join(parts)


@dataclass
class AuditResult:
    srs: str
    axiom: str
    bounds: SearchBounds
    witness: Witness | None = None
    instances: int = 0
    elapsed_ms: float = 0.0
    position: tuple = field(default=(), repr=False)

    @property
    def passed(self) -> bool:
        return self.witness is None

    @property
    def status(self) -> str:
        return PASS if self.witness is None else VIOLATED

    def as_dict(self) -> dict:
        out = {
            "srs": self.srs,
            "axiom": self.axiom,
            "status": self.status,
            "bounds": self.bounds.as_dict(),
            "seed": self.bounds.seed,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
        return out


# --------------------------------------------------------------------------
# verdict helpers


def _verdict(rel: Sequence[int], slot: dict, x: int, y: int) -> int:
    if x < y:
        return rel[slot[(x, y)]]
    return -rel[slot[(y, x)]]


def _slots(n: int) -> dict:
    return {p: k for k, p in enumerate(pairs_of(n))}


def clause_violated(v1: int, v2: int, v: int) -> int | None:
    """Number of the consistency clause broken by verdicts oriented on ``(x, y)``."""
    if v1 == 0 and v2 == 0:
        return 1 if v != 0 else None
    if v1 == 0 and v2 == 1:
        return 2 if v != 1 else None
    if v1 == 1 and v2 == 0:
        return 3 if v != 1 else None
    if v1 == 1 and v2 == 1:
        return 4 if v != 1 else None
    return None


def consistency_violations(rel1, rel2, rel, n: int) -> tuple[tuple[int, int, int], ...]:
    """Every ``(x, y, clause)`` violation, in canonical pair order."""
    out = []
    for k, (i, j) in enumerate(pairs_of(n)):
        a, b, c = rel1[k], rel2[k], rel[k]
        cl = clause_violated(a, b, c)
        if cl is not None:
            out.append((i, j, cl))
        if cl != 1:
            cl = clause_violated(-a, -b, -c)
            if cl is not None and cl != 1:
                out.append((j, i, cl))
    return tuple(out)


def _infer_roster(*rankings: Ranking) -> Roster:
    top = 0
    for r in rankings:
        for c in r:
            top = max(top, c.bit_length() - 1)
    return Roster.default(max(3, top.bit_length()))


def _resolve(srs, roster, *rankings) -> tuple[Srs, Roster]:
    s = get_srs(srs)
    return s, roster if roster is not None else _infer_roster(*rankings)


# --------------------------------------------------------------------------
# instance checks


def sum_of_kind(kind: str, r1: Ranking, r2: Ranking) -> Ranking:
    return {
        "concat": sm.concat_sum,
        "top": sm.top_aligned_sum,
        "bottom": sm.bottom_aligned_sum,
    }[kind](r1, r2)


def check_consistency_instance(
    srs,
    r1: Ranking,
    r2: Ranking,
    sum_ranking: Ranking,
    x: int,
    y: int,
    *,
    roster: Roster | None = None,
    axiom: str = "CON",
) -> Witness | None:
    """Check clauses of ``axiom`` for the ordered pair ``(x, y)`` on one sum."""
    s, roster = _resolve(srs, roster, r1, r2, sum_ranking)
    axiom = get_axiom(axiom)
    if not sm.are_disjoint(r1, r2) or not sm.is_sum_of(sum_ranking, r1, r2):
        raise NotASumError(None, "the combined ranking is not a sum of the two parts")
    kind = SUM_KIND[axiom]
    if kind != "any" and sum_of_kind(kind, r1, r2) != tuple(sum_ranking):
        raise NotASumError(None, f"the combined ranking is not the {kind} sum")
    if x == y:
        return None
    v1 = s.compare(r1, x, y, roster)
    v2 = s.compare(r2, x, y, roster)
    v = s.compare(sum_ranking, x, y, roster)
    cl = clause_violated(v1, v2, v)
    if cl is None or cl not in CONSISTENCY_CLAUSES[axiom]:
        return None
    return Witness(
        s.name,
        axiom,
        {"r1": tuple(r1), "r2": tuple(r2), "sum": tuple(sum_ranking), "kind": kind},
        (x, y),
        {"r1": v1, "r2": v2, "sum": v},
        cl,
        roster,
    )


def check_consistency_all_pairs(srs, r1, r2, sum_ranking, *, roster=None, axiom="CON"):
    """First violated ordered pair of a single consistency instance, or ``None``."""
    s, roster = _resolve(srs, roster, r1, r2, sum_ranking)
    for i, j in pairs_of(roster.n):
        for x, y in ((i, j), (j, i)):
            w = check_consistency_instance(
                s, r1, r2, sum_ranking, x, y, roster=roster, axiom=axiom
            )
            if w is not None:
                return w
    return None


def check_nt_instance(srs, ranking: Ranking, sigma: Sequence[int], *, roster=None):
    """Compare the relabelled relation with the relation of the relabelled ranking."""
    s, roster = _resolve(srs, roster, ranking)
    sigma = tuple(sigma)
    image = en.apply_sigma(ranking, sigma)
    before = s.relation(ranking, roster)
    after = s.relation(image, roster)
    slot = _slots(roster.n)
    inverse = [0] * roster.n
    for i, t in enumerate(sigma):
        inverse[t] = i
    for a, b in pairs_of(roster.n):
        expected = _verdict(before, slot, inverse[a], inverse[b])
        actual = after[slot[(a, b)]]
        if expected != actual:
            return Witness(
                s.name,
                "NT",
                {"ranking": tuple(ranking), "sigma": sigma, "image": image},
                (a, b),
                {"relabelled": expected, "image": actual},
                None,
                roster,
            )
    return None


def check_wca_instance(srs, ranking: Ranking, pi: Sequence[int], x: int, y: int, *, roster=None):
    s, roster = _resolve(srs, roster, ranking)
    pi = tuple(pi)
    for t in range(1, len(pi)):
        if bool(t & (1 << x)) != bool(pi[t] & (1 << x)) or bool(t & (1 << y)) != bool(
            pi[t] & (1 << y)
        ):
            raise ValueError("pi is not {x,y}-invariant")
    image = en.apply_pi(ranking, pi)
    v = s.compare(ranking, x, y, roster)
    w = s.compare(image, x, y, roster)
    if v == w:
        return None
    return Witness(
        s.name,
        "WCA",
        {"ranking": tuple(ranking), "pi": pi, "image": image},
        (x, y),
        {"ranking": v, "image": w},
        None,
        roster,
    )


def _strict_preserved(s, roster, before, after, axiom, inputs, labels):
    slot = _slots(roster.n)
    for i, j in pairs_of(roster.n):
        for x, y in ((i, j), (j, i)):
            v = _verdict(before, slot, x, y)
            if v == 1:
                w = _verdict(after, slot, x, y)
                if w != 1:
                    return Witness(s.name, axiom, inputs, (x, y), {labels[0]: v, labels[1]: w}, None, roster)
    return None


def is_decomposition(ranking: Ranking, decomposed: Ranking) -> bool:
    l = len(ranking)
    if l < 2 or len(decomposed) < l:
        return False
    if tuple(decomposed[: l - 1]) != tuple(ranking[:-1]):
        return False
    tail = 0
    for c in decomposed[l - 1 :]:
        tail |= c
    return tail == ranking[-1]


def check_idws_instance(srs, ranking: Ranking, decomposed: Ranking, *, roster=None):
    s, roster = _resolve(srs, roster, ranking, decomposed)
    if not is_decomposition(ranking, decomposed):
        raise ValueError("decomposed does not split the worst class of ranking")
    return _strict_preserved(
        s,
        roster,
        s.relation(ranking, roster),
        s.relation(decomposed, roster),
        "IDWS",
        {"ranking": tuple(ranking), "decomposed": tuple(decomposed)},
        ("ranking", "decomposed"),
    )


def check_iaws_instance(srs, ranking: Ranking, extended: Ranking, *, roster=None):
    s, roster = _resolve(srs, roster, ranking, extended)
    if (
        len(extended) != len(ranking) + 1
        or tuple(extended[:-1]) != tuple(ranking)
        or extended[-1] & domain(ranking)
        or not extended[-1]
    ):
        raise ValueError("extended must append one new worst class of fresh coalitions")
    return _strict_preserved(
        s,
        roster,
        s.relation(ranking, roster),
        s.relation(extended, roster),
        "IAWS",
        {"ranking": tuple(ranking), "extended": tuple(extended)},
        ("ranking", "extended"),
    )


def check_to_instance(srs, ranking: Ranking, other: Ranking, *, roster=None):
    s, roster = _resolve(srs, roster, ranking, other)
    if not ranking or not other or ranking[0] != other[0]:
        raise ValueError("tops-only compares two rankings with the same best class")
    a = s.relation(ranking, roster)
    b = s.relation(other, roster)
    for k, (i, j) in enumerate(pairs_of(roster.n)):
        if a[k] != b[k]:
            return Witness(
                s.name,
                "TO",
                {"ranking": tuple(ranking), "other": tuple(other)},
                (i, j),
                {"ranking": a[k], "other": b[k]},
                None,
                roster,
            )
    return None


def _participants(class_mask: int) -> int:
    out = 0
    for s in iter_bits(class_mask):
        out |= s
    return out


def check_aiaw_instance(srs, ranking: Ranking, *, roster=None):
    s, roster = _resolve(srs, roster, ranking)
    if len(ranking) > 1:
        raise ValueError("AIAW applies to rankings with at most one class")
    members = _participants(ranking[0]) if ranking else 0
    rel = s.relation(ranking, roster)
    slot = _slots(roster.n)
    for x in range(roster.n):
        if not members >> x & 1:
            continue
        for y in range(roster.n):
            if y == x:
                continue
            v = _verdict(rel, slot, x, y)
            inside = members >> y & 1
            if inside and v != 0:
                clause = "indifference"
            elif not inside and v != 1:
                clause = "winner"
            else:
                continue
            return Witness(s.name, "AIAW", {"ranking": tuple(ranking)}, (x, y), {"ranking": v}, clause, roster)
    return None


def check_wuvip_instance(srs, ranking: Ranking, *, roster=None):
    s, roster = _resolve(srs, roster, ranking)
    if len(ranking) != 2:
        raise ValueError("WUVIP applies to two-class rankings")
    top = _participants(ranking[0])
    rel = s.relation(ranking, roster)
    slot = _slots(roster.n)
    for x in range(roster.n):
        if not top >> x & 1:
            continue
        for y in range(roster.n):
            if top >> y & 1:
                continue
            v = _verdict(rel, slot, x, y)
            if v != 1:
                return Witness(s.name, "WUVIP", {"ranking": tuple(ranking)}, (x, y), {"ranking": v}, None, roster)
    return None


def replay(witness: Witness) -> Witness | None:
    """Re-run the instance check that produced ``witness``."""
    w, ins, r = witness, witness.inputs, witness.roster
    if w.axiom in CONSISTENCY_CLAUSES:
        return check_consistency_instance(
            w.srs, ins["r1"], ins["r2"], ins["sum"], *w.pair, roster=r, axiom=w.axiom
        )
    if w.axiom == "NT":
        return check_nt_instance(w.srs, ins["ranking"], ins["sigma"], roster=r)
    if w.axiom == "WCA":
        return check_wca_instance(w.srs, ins["ranking"], ins["pi"], *w.pair, roster=r)
    if w.axiom == "IDWS":
        return check_idws_instance(w.srs, ins["ranking"], ins["decomposed"], roster=r)
    if w.axiom == "IAWS":
        return check_iaws_instance(w.srs, ins["ranking"], ins["extended"], roster=r)
    if w.axiom == "TO":
        return check_to_instance(w.srs, ins["ranking"], ins["other"], roster=r)
    if w.axiom == "AIAW":
        return check_aiaw_instance(w.srs, ins["ranking"], roster=r)
    if w.axiom == "WUVIP":
        return check_wuvip_instance(w.srs, ins["ranking"], roster=r)
    raise UnknownAxiomError(None, w.axiom)


# --------------------------------------------------------------------------
# size estimates


def _fub(d: int) -> int:
    return en.fubini(d)


def estimate_instances(axiom: str, bounds: SearchBounds) -> int:
    """Rough count of instances an exhaustive audit visits (no early stop)."""
    axiom = get_axiom(axiom)
    n = bounds.roster_size
    N = bounds.coalition_count
    dmax = min(bounds.max_domain, N)
    rankings = en.count_rankings(n, dmax, bounds.max_classes)
    pairs = len(pairs_of(n))
    if axiom in CONCAT_AXIOMS:
        return sum(comb(N, d) * _fub(d) * max(d - 1, 0) for d in range(dmax + 1))
    if axiom in ("TCON", "BCON"):
        return sum(
            comb(N, d) * sum(comb(d, a) * _fub(a) * _fub(d - a) for a in range(1, d))
            for d in range(dmax + 1)
        )
    if axiom == "CON":
        return sum(comb(N, d) * _fub(d) * (2**d) for d in range(dmax + 1))
    if axiom == "NT":
        return rankings * factorial(n)
    if axiom == "WCA":
        return rankings * pairs * en.count_xy_invariant(n)
    if axiom == "IDWS":
        return sum(comb(N, d) * _fub(d) * _fub(d) for d in range(dmax + 1))
    if axiom == "IAWS":
        return sum(comb(N, d) * _fub(d) * (2 ** (N - d)) for d in range(dmax))
    return rankings


def _check_budget(axiom: str, bounds: SearchBounds) -> None:
    if bounds.mode != EXHAUSTIVE:
        return
    est = estimate_instances(axiom, bounds)
    if est > bounds.budget:
        raise BoundsTooLargeError(
            None,
            f"{axiom} at |X|={bounds.roster_size}, max_domain={bounds.max_domain} "
            f"needs about {est} instances (budget {bounds.budget}); "
            "lower the bounds or use sampled mode",
        )


# --------------------------------------------------------------------------
# exhaustive searches


class _Cache:
    """Per-SRS relation memo for rankings that recur as parts of larger ones."""

    def __init__(self, srs: Srs, roster: Roster, memo_below: int):
        self.srs = srs
        self.roster = roster
        self.memo: dict[Ranking, tuple] = {}
        self.memo_below = memo_below
        self.triples: dict[tuple, tuple] = {}

    def rel(self, ranking: Ranking) -> tuple:
        got = self.memo.get(ranking)
        if got is None:
            got = self.srs.relation(ranking, self.roster)
            if len(self.memo) < 2_000_000 and domain(ranking).bit_count() < self.memo_below:
                self.memo[ranking] = got
        return got

    def violations(self, a, b, c) -> tuple:
        key = (a, b, c)
        got = self.triples.get(key)
        if got is None:
            got = consistency_violations(a, b, c, self.roster.n)
            self.triples[key] = got
        return got


@dataclass
class _Cell:
    srs: Srs
    axiom: str
    clauses: tuple[int, ...] = ()
    witness: Witness | None = None
    position: tuple = ()
    instances: int = 0
    started: float = 0.0
    elapsed_ms: float = 0.0

    def done(self) -> bool:
        return self.witness is not None

    def record(self, witness: Witness, position: tuple) -> None:
        self.witness = witness
        self.position = position
        self.elapsed_ms = (time.perf_counter() - self.started) * 1000


def _units(n: int, max_domain: int, min_domain: int, shard):
    for unit, dom in enumerate(en.domains(n, max_domain, min_domain)):
        if shard is not None and unit % shard[1] != shard[0]:
            continue
        yield unit, dom


def _search_concat(cells: list[_Cell], bounds: SearchBounds, roster: Roster, shard) -> None:
    """All concatenation cells share one pass over (sum, split point) pairs.

    Every disjoint pair of nonempty parts arises exactly once as a ranking
    ``R`` cut after one of its first ``l - 1`` classes.  Relations of the
    parts are memoised jointly for all SRSs involved.
    """
    names: list[str] = []
    groups: list[list[_Cell]] = []
    for c in cells:
        if c.srs.name not in names:
            names.append(c.srs.name)
            groups.append([])
        groups[names.index(c.srs.name)].append(c)
    fns = [g[0].srs.relation for g in groups]
    triple_caches: list[dict] = [{} for _ in groups]
    pending = [len(g) for g in groups]
    visited = [0] * len(groups)
    n = roster.n
    slot = _slots(n)
    memo: dict[Ranking, tuple] = {}

    def rels(r: Ranking) -> tuple:
        return tuple([f(r, roster) for f in fns])

    counter = 0
    for unit, dom in _units(n, bounds.max_domain, 2, shard):
        if not any(pending):
            break
        store = dom.bit_count() < bounds.max_domain
        for R in en.weak_orders(dom, bounds.max_classes):
            l = len(R)
            if l < 2:
                continue
            counter += 1
            RR = memo.get(R)
            if RR is None:
                RR = rels(R)
                if store:
                    memo[R] = RR
            for j in range(1, l):
                r1, r2 = R[:j], R[j:]
                A = memo.get(r1)
                if A is None:
                    A = memo[r1] = rels(r1)
                B = memo.get(r2)
                if B is None:
                    B = memo[r2] = rels(r2)
                for k, tc in enumerate(triple_caches):
                    if not pending[k]:
                        continue
                    key = (A[k], B[k], RR[k])
                    viol = tc.get(key)
                    if viol is None:
                        viol = tc[key] = consistency_violations(A[k], B[k], RR[k], n)
                    if not viol:
                        continue
                    for cell in groups[k]:
                        if cell.done():
                            continue
                        for x, y, cl in viol:
                            if cl in cell.clauses:
                                w = Witness(
                                    names[k],
                                    cell.axiom,
                                    {"r1": r1, "r2": r2, "sum": R, "kind": "concat"},
                                    (x, y),
                                    {
                                        "r1": _verdict(A[k], slot, x, y),
                                        "r2": _verdict(B[k], slot, x, y),
                                        "sum": _verdict(RR[k], slot, x, y),
                                    },
                                    cl,
                                    roster,
                                )
                                cell.record(w, (unit, counter, j))
                                cell.instances = visited[k] + j
                                pending[k] -= 1
                                break
            for k in range(len(groups)):
                if pending[k]:
                    visited[k] += l - 1
    for k, g in enumerate(groups):
        for c in g:
            if not c.done():
                c.instances = visited[k]


def _pairs_on(dom: int, bounds: SearchBounds) -> Iterator[tuple[Ranking, Ranking]]:
    mc = bounds.max_classes
    a = (dom - 1) & dom
    while a:
        rest = dom & ~a
        for r1 in en.weak_orders(a, mc):
            for r2 in en.weak_orders(rest, mc):
                yield r1, r2
        a = (a - 1) & dom


def _search_sums(cells: list[_Cell], bounds: SearchBounds, roster: Roster, shard) -> None:
    """TCON, BCON and CON: enumerate the combined domain, then split it."""
    caches: dict[str, _Cache] = {}
    for c in cells:
        caches.setdefault(c.srs.name, _Cache(c.srs, roster, bounds.max_domain))
    counter = 0
    slot = _slots(roster.n)
    for unit, dom in _units(roster.n, bounds.max_domain, 2, shard):
        if all(c.done() for c in cells):
            break
        for r1, r2 in _pairs_on(dom, bounds):
            counter += 1
            kinds = {}
            for cell in cells:
                if cell.done():
                    continue
                kind = SUM_KIND[cell.axiom]
                if kind not in kinds:
                    if kind == "any":
                        kinds[kind] = [t for t in sm.enumerate_sums(r1, r2) if bounds.fits(t)]
                    else:
                        t = sum_of_kind(kind, r1, r2)
                        kinds[kind] = [t] if bounds.fits(t) else []
                cache = caches[cell.srs.name]
                a, b = cache.rel(r1), cache.rel(r2)
                for t in kinds[kind]:
                    cell.instances += 1
                    relT = cache.rel(t)
                    for x, y, cl in cache.violations(a, b, relT):
                        w = Witness(
                            cell.srs.name,
                            cell.axiom,
                            {"r1": r1, "r2": r2, "sum": t, "kind": kind},
                            (x, y),
                            {
                                "r1": _verdict(a, slot, x, y),
                                "r2": _verdict(b, slot, x, y),
                                "sum": _verdict(relT, slot, x, y),
                            },
                            cl,
                            roster,
                        )
                        cell.record(w, (unit, counter))
                        break
                    if cell.done():
                        break


def _rankings_with_units(bounds: SearchBounds, roster: Roster, shard, max_domain=None, min_domain=0):
    md = bounds.max_domain if max_domain is None else max_domain
    for unit, dom in _units(roster.n, md, min_domain, shard):
        for r in en.weak_orders(dom, bounds.max_classes):
            yield unit, r


def _search_single(cell: _Cell, bounds: SearchBounds, roster: Roster, shard) -> None:
    s, axiom = cell.srs, cell.axiom
    n = roster.n
    counter = 0

    def found(w, unit):
        if w is not None:
            cell.record(w, (unit, counter))
            return True
        return False

    if axiom == "NT":
        sigmas = list(en.roster_permutations(n))[1:]
        for unit, r in _rankings_with_units(bounds, roster, shard):
            for sigma in sigmas:
                counter += 1
                cell.instances += 1
                if found(check_nt_instance(s, r, sigma, roster=roster), unit):
                    return
    elif axiom == "WCA":
        perms = {p: list(en.xy_invariant_permutations(n, *p))[1:] for p in pairs_of(n)}
        for unit, r in _rankings_with_units(bounds, roster, shard, min_domain=1):
            for (x, y), pis in perms.items():
                v = s.compare(r, x, y, roster)
                seen = set()
                for pi in pis:
                    counter += 1
                    cell.instances += 1
                    image = en.apply_pi(r, pi)
                    if image in seen:
                        continue
                    seen.add(image)
                    if s.compare(image, x, y, roster) != v:
                        found(check_wca_instance(s, r, pi, x, y, roster=roster), unit)
                        return
    elif axiom == "IDWS":
        for unit, r in _rankings_with_units(bounds, roster, shard, min_domain=2):
            if len(r) < 2:
                continue
            base = s.relation(r, roster)
            if not any(base):
                continue
            room = None if bounds.max_classes is None else bounds.max_classes - len(r) + 1
            for dec in en.weak_orders(r[-1], room):
                if len(dec) < 2:
                    continue
                counter += 1
                cell.instances += 1
                r2 = r[:-1] + dec
                if found(
                    _strict_preserved(
                        s, roster, base, s.relation(r2, roster), "IDWS",
                        {"ranking": r, "decomposed": r2}, ("ranking", "decomposed"),
                    ),
                    unit,
                ):
                    return
    elif axiom == "IAWS":
        full = (1 << (1 << n)) - 2
        if bounds.max_classes is not None and bounds.max_classes < 1:
            return
        for unit, r in _rankings_with_units(bounds, roster, shard, max_domain=bounds.max_domain - 1):
            if bounds.max_classes is not None and len(r) + 1 > bounds.max_classes:
                continue
            base = s.relation(r, roster)
            if not any(base):
                continue
            free = full & ~domain(r)
            room = bounds.max_domain - domain(r).bit_count()
            for k in range(1, room + 1):
                for combo in itertools.combinations(list(iter_bits(free)), k):
                    gamma = 0
                    for t in combo:
                        gamma |= 1 << t
                    counter += 1
                    cell.instances += 1
                    ext = r + (gamma,)
                    if found(
                        _strict_preserved(
                            s, roster, base, s.relation(ext, roster), "IAWS",
                            {"ranking": r, "extended": ext}, ("ranking", "extended"),
                        ),
                        unit,
                    ):
                        return
    elif axiom == "TO":
        for unit, r in _rankings_with_units(bounds, roster, shard, min_domain=2):
            if len(r) < 2:
                continue
            counter += 1
            cell.instances += 1
            if found(check_to_instance(s, r[:1], r, roster=roster), unit):
                return
    elif axiom == "AIAW":
        for unit, r in _rankings_with_units(bounds, roster, shard):
            if len(r) > 1:
                continue
            counter += 1
            cell.instances += 1
            if found(check_aiaw_instance(s, r, roster=roster), unit):
                return
    elif axiom == "WUVIP":
        if bounds.max_classes is not None and bounds.max_classes < 2:
            return
        for unit, r in _rankings_with_units(bounds, roster, shard, min_domain=2):
            if len(r) != 2:
                continue
            counter += 1
            cell.instances += 1
            if found(check_wuvip_instance(s, r, roster=roster), unit):
                return
    else:  # pragma: no cover - guarded by get_axiom
        raise UnknownAxiomError(None, axiom)


def _run_exhaustive(cells: list[_Cell], bounds: SearchBounds, shard=None) -> None:
    roster = bounds.roster()
    concat = [c for c in cells if c.axiom in CONCAT_AXIOMS]
    sums_ = [c for c in cells if c.axiom in ("CON", "TCON", "BCON")]
    if concat:
        _search_concat(concat, bounds, roster, shard)
    if sums_:
        _search_sums(sums_, bounds, roster, shard)
    for c in cells:
        if c.axiom not in CONSISTENCY_CLAUSES:
            _search_single(c, bounds, roster, shard)


# --------------------------------------------------------------------------
# sampled searches


def random_ranking(
    rng: random.Random,
    n: int,
    max_domain: int,
    max_classes: int | None = None,
    min_domain: int = 1,
    exclude: int = 0,
    size: int | None = None,
) -> Ranking:
    """A random ranking: uniform domain size, uniform subset, random class labels.

    Not uniform over rankings; documented as a seeded heuristic sampler.
    """
    pool = [s for s in range(1, 1 << n) if not exclude >> s & 1]
    hi = min(max_domain, len(pool))
    if hi < min_domain:
        return ()
    d = size if size is not None else rng.randint(min_domain, hi)
    chosen = rng.sample(pool, d)
    if d == 0:
        return ()
    cap = d if max_classes is None else min(d, max_classes)
    k = rng.randint(1, cap)
    labels = [rng.randrange(k) for _ in chosen]
    classes = [0] * k
    for s, lab in zip(chosen, labels):
        classes[lab] |= 1 << s
    return tuple(c for c in classes if c)


def _sample_cell(cell: _Cell, bounds: SearchBounds, roster: Roster) -> None:
    rng = random.Random(f"{bounds.seed}:{cell.srs.name}:{cell.axiom}")
    n, md, mc = roster.n, bounds.max_domain, bounds.max_classes
    s, axiom = cell.srs, cell.axiom
    pairs = pairs_of(n)
    for trial in range(bounds.trials):
        w = None
        if axiom in CONSISTENCY_CLAUSES:
            if md < 2:
                return
            combined = random_ranking(rng, n, md, mc, min_domain=2)
            kind = SUM_KIND[axiom]
            if kind == "concat":
                if len(combined) < 2:
                    continue
                j = rng.randrange(1, len(combined))
                r1, r2, t = combined[:j], combined[j:], combined
            else:
                dom = domain(combined)
                bits = list(iter_bits(dom))
                a = rng.randrange(1, len(bits))
                left = 0
                for b in rng.sample(bits, a):
                    left |= 1 << b
                r1 = tuple(c & left for c in combined if c & left)
                r2 = tuple(c & ~left for c in combined if c & ~left)
                if kind == "any":
                    t = combined
                else:
                    t = sum_of_kind(kind, r1, r2)
                    if not bounds.fits(t):
                        continue
            w = check_consistency_all_pairs(s, r1, r2, t, roster=roster, axiom=axiom)
        elif axiom == "NT":
            r = random_ranking(rng, n, md, mc, min_domain=0)
            sigma = list(range(n))
            rng.shuffle(sigma)
            w = check_nt_instance(s, r, sigma, roster=roster)
        elif axiom == "WCA":
            r = random_ranking(rng, n, md, mc)
            x, y = rng.choice(pairs)
            pi = list(range(1 << n))
            for cell_ in en.membership_cells(n, x, y):
                img = list(cell_)
                rng.shuffle(img)
                for src, dst in zip(cell_, img):
                    pi[src] = dst
            w = check_wca_instance(s, r, pi, x, y, roster=roster)
        elif axiom == "IDWS":
            if md < 2:
                return
            r = random_ranking(rng, n, md, mc, min_domain=2)
            if len(r) < 2 or r[-1].bit_count() < 2:
                continue
            bits = list(iter_bits(r[-1]))
            room = len(bits) if mc is None else min(len(bits), mc - len(r) + 1)
            if room < 2:
                continue
            k = rng.randint(2, room)
            rng.shuffle(bits)
            parts = [0] * k
            for idx, b in enumerate(bits):
                parts[idx if idx < k else rng.randrange(k)] |= 1 << b
            w = check_idws_instance(s, r, r[:-1] + tuple(parts), roster=roster)
        elif axiom == "IAWS":
            if md < 2:
                return
            r = random_ranking(rng, n, md - 1, None if mc is None else mc - 1, min_domain=1)
            if not r:
                continue
            room = md - domain(r).bit_count()
            gamma_r = random_ranking(rng, n, room, 1, exclude=domain(r) | 1)
            if not gamma_r:
                continue
            w = check_iaws_instance(s, r, r + gamma_r, roster=roster)
        elif axiom == "TO":
            r = random_ranking(rng, n, md, mc, min_domain=2)
            if len(r) < 2:
                continue
            w = check_to_instance(s, r[:1], r, roster=roster)
        elif axiom == "AIAW":
            r = random_ranking(rng, n, md, 1, min_domain=0)
            w = check_aiaw_instance(s, r, roster=roster)
        elif axiom == "WUVIP":
            if md < 2 or (mc is not None and mc < 2):
                return
            r = random_ranking(rng, n, md, 2, min_domain=2)
            if len(r) != 2:
                continue
            w = check_wuvip_instance(s, r, roster=roster)
        cell.instances += 1
        if w is not None:
            cell.record(w, (trial,))
            return


# --------------------------------------------------------------------------
# public drivers


def _make_cells(srs_list, axiom_list) -> list[_Cell]:
    cells = []
    now = time.perf_counter()
    for name in srs_list:
        s = get_srs(name)
        for a in axiom_list:
            a = get_axiom(a)
            cells.append(_Cell(s, a, CONSISTENCY_CLAUSES.get(a, ()), started=now))
    return cells


def _shard_worker(args):
    srs_names, axioms, bounds, shard = args
    cells = _make_cells(srs_names, axioms)
    _run_exhaustive(cells, bounds, shard)
    return [(c.srs.name, c.axiom, c.witness, c.position, c.instances) for c in cells]


def audit_matrix(
    srs_list: Iterable,
    axiom_list: Iterable,
    bounds: SearchBounds,
    *,
    workers: int = 1,
) -> list[AuditResult]:
    """Audit every (SRS, axiom) cell; results come back in input order.

    With ``workers > 1`` the domains are dealt round-robin to processes and the
    earliest witness (by enumeration position) wins, so the output does not
    depend on scheduling.
    """
    srs_names = [get_srs(s).name for s in srs_list]
    axioms = [get_axiom(a) for a in axiom_list]
    for a in set(axioms):
        _check_budget(a, bounds)
    start = time.perf_counter()
    cells = _make_cells(srs_names, axioms)
    if bounds.mode == SAMPLED:
        roster = bounds.roster()
        for c in cells:
            c.started = time.perf_counter()
            _sample_cell(c, bounds, roster)
            if c.witness is None:
                c.elapsed_ms = (time.perf_counter() - c.started) * 1000
    elif workers > 1:
        jobs = [(srs_names, axioms, bounds, (i, workers)) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_shard_worker, jobs))
        for c in cells:
            best = None
            for part in parts:
                for name, ax, w, pos, count in part:
                    if name == c.srs.name and ax == c.axiom:
                        c.instances += count
                        if w is not None and (best is None or pos < best[1]):
                            best = (w, pos)
            if best is not None:
                c.witness, c.position = best
            c.elapsed_ms = (time.perf_counter() - start) * 1000
    else:
        _run_exhaustive(cells, bounds)
        end = time.perf_counter()
        for c in cells:
            if c.witness is None:
                c.elapsed_ms = (end - c.started) * 1000
    return [
        AuditResult(c.srs.name, c.axiom, bounds, c.witness, c.instances, c.elapsed_ms, c.position)
        for c in cells
    ]


def audit_axiom(srs, axiom, bounds: SearchBounds, *, workers: int = 1) -> AuditResult:
    return audit_matrix([srs], [axiom], bounds, workers=workers)[0]


@dataclass
class ImplicationResult:
    srs: str
    premises: tuple[str, ...]
    conclusion: str
    premise_results: list[AuditResult]
    conclusion_result: AuditResult

    @property
    def premises_hold(self) -> bool:
        return all(r.passed for r in self.premise_results)

    @property
    def holds(self) -> bool:
        """False exactly when every premise passes and the conclusion fails."""
        return not self.premises_hold or self.conclusion_result.passed

    @property
    def counter_instance(self) -> Witness | None:
        return None if self.holds else self.conclusion_result.witness


def check_implication(premises, conclusion, srs, bounds: SearchBounds) -> ImplicationResult:
    premises = tuple(get_axiom(a) for a in premises)
    conclusion = get_axiom(conclusion)
    results = audit_matrix([srs], list(premises) + [conclusion], bounds)
    return ImplicationResult(get_srs(srs).name, premises, conclusion, results[:-1], results[-1])


# --------------------------------------------------------------------------
# canonical forms


def relabel_witness(w: Witness, sigma: Sequence[int]) -> Witness:
    """Image of ``w`` under a relabelling ``sigma`` of the individuals."""
    inputs: dict[str, Any] = {}
    for k, v in w.inputs.items():
        if k == "pi":
            n = w.roster.n
            inv = [0] * n
            for i, t in enumerate(sigma):
                inv[t] = i
            pi = [0] * (1 << n)
            for s in range(1, 1 << n):
                pre = en.sigma_on_coalition(s, inv)
                pi[s] = en.sigma_on_coalition(v[pre], sigma)
            inputs[k] = tuple(pi)
        elif isinstance(v, tuple):
            inputs[k] = en.apply_sigma(v, sigma)
        else:
            inputs[k] = v
    return replace(w, inputs=inputs, pair=(sigma[w.pair[0]], sigma[w.pair[1]]))


def _sort_key(w: Witness):
    return (
        tuple((k, v) for k, v in sorted(w.inputs.items(), key=lambda kv: kv[0])),
        w.pair,
    )


def canonical_witness(w: Witness) -> Witness:
    """Smallest relabelling of ``w``; NT witnesses are returned unchanged."""
    if w.axiom == "NT":
        return w
    return min(
        (relabel_witness(w, sigma) for sigma in en.roster_permutations(w.roster.n)),
        key=_sort_key,
    )


def dedupe_witnesses(witnesses: Iterable[Witness]) -> list[Witness]:
    out, seen = [], set()
    for w in witnesses:
        key = (w.srs, w.axiom, repr(_sort_key(canonical_witness(w))))
        if key not in seen:
            seen.add(key)
            out.append(w)
    return out


def all_concat_pairs(roster_size: int, max_domain: int) -> Iterator[tuple[Ranking, Ranking]]:
    """Disjoint pairs of nonempty rankings whose concatenation fits ``max_domain``."""
    for R in en.all_rankings(roster_size, max_domain):
        for j in range(1, len(R)):
            yield R[:j], R[j:]


__all__ = [
    "AXIOM_NAMES",
    "AuditResult",
    "SearchBounds",
    "Witness",
    "audit_axiom",
    "audit_matrix",
    "canonical_witness",
    "check_aiaw_instance",
    "check_consistency_instance",
    "check_idws_instance",
    "check_iaws_instance",
    "check_implication",
    "check_nt_instance",
    "check_to_instance",
    "check_wca_instance",
    "check_wuvip_instance",
    "dedupe_witnesses",
    "replay",
]
