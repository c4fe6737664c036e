"""Worked examples and counterexample fixtures, with a replayable report.

Each :class:`Fixture` pins concrete inputs, an ordered pair and the verdicts
the counterexample is supposed to produce.  Evaluating it recomputes those
verdicts and runs the matching instance check from :mod:`socrank.axioms`.

A fixture marked *disputed* is one whose published claim does not survive
direct computation (the claimed verdict differs, or the two parts of a sum
share a coalition).  It is still evaluated, its actual verdicts are reported,
and the attached replacement (a corrected instance found by computation)
must reproduce instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from socrank import axioms as ax
from socrank import scores as sc
from socrank import sums as sm
from socrank.enumeration import apply_pi, apply_sigma
from socrank.model import Ranking, Roster, Verdict, class_index, domain
from socrank.notation import parse_partition, parse_ranking_line, render_ranking
from socrank.solutions import apply, get_srs

XYZ = Roster(("x", "y", "z"))
XYZW = Roster(("x", "y", "z", "w"))
ONE_TWO_THREE = Roster(("1", "2", "3"))
ABCXY = Roster(("a", "b", "c", "x", "y"))

P, I, INV_P = Verdict.P, Verdict.I, Verdict.INV_P


def rk(roster: Roster, text: str) -> Ranking:
    return parse_ranking_line(text, roster)


def everything_but(roster: Roster, ranking_text: str) -> int:
    """Class mask of every coalition not mentioned in ``ranking_text``."""
    return roster.all_coalitions_mask & ~domain(rk(roster, ranking_text))


def top_then_rest(roster: Roster, top_text: str) -> Ranking:
    """``top`` followed by one class holding all remaining coalitions."""
    top = rk(roster, top_text)
    return top + (everything_but(roster, top_text),)


def swap(roster: Roster, a: str, b: str) -> tuple[int, ...]:
    sigma = list(range(roster.n))
    i, j = roster.index(a), roster.index(b)
    sigma[i], sigma[j] = j, i
    return tuple(sigma)


def coalition_swap(roster: Roster, moves: dict[str, str]) -> tuple[int, ...]:
    """Coalition permutation from ``{"{x,a}": "{x,b,c}", ...}``; unlisted sets stay."""
    pi = list(range(1 << roster.n))
    for src, dst in moves.items():
        pi[rk(roster, src)[0].bit_length() - 1] = rk(roster, dst)[0].bit_length() - 1
    return tuple(pi)


# --------------------------------------------------------------------------
# fixtures


@dataclass(frozen=True)
class Fixture:
    srs: str
    axioms: tuple[str, ...]
    roster: Roster
    inputs: dict[str, Any]
    pair: tuple[str, str]
    expected: dict[str, Verdict]
    origin: str  # "published" or "derived"
    fid: str
    disputed: str | None = None
    replacement: "Fixture | None" = None
    note: str = ""

    @property
    def xy(self) -> tuple[int, int]:
        return self.roster.index(self.pair[0]), self.roster.index(self.pair[1])


@dataclass
class FixtureOutcome:
    fixture: Fixture
    status: str  # PASS, FAIL, DISPUTED
    actual: dict[str, Any]
    witnesses: list = field(default_factory=list)
    replacement: "FixtureOutcome | None" = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        if self.status == "DISPUTED":
            return self.replacement is not None and self.replacement.status == "PASS"
        return self.status == "PASS"


def _consistency(srs, axioms, roster, r1, r2, pair, expected, origin, fid, **kw):
    return Fixture(srs, axioms, roster, {"r1": r1, "r2": r2}, pair, expected, origin, fid, **kw)


def _fixtures() -> list[Fixture]:
    F: list[Fixture] = []
    add = F.append
    X = XYZ

    # consistency: S lex-cel fails the aligned sums
    add(_consistency("SL", ("TCON", "BCON"), X, rk(X, "{x,y}"), rk(X, "{x}"), ("x", "y"),
                     {"r1": I, "r2": P, "sum": I}, "published", "sl-aligned-sums"))
    add(_consistency("P", ("CCON", "BCON"), X, rk(X, "{x,y} > {z}"), rk(X, "{x}"), ("x", "y"),
                     {"r1": I, "r2": P, "sum": I}, "published", "plurality-concat-bottom"))
    add(_consistency("AP", ("CCON", "TCON"), X, rk(X, "{x}"), rk(X, "{z} > {x,y}"), ("y", "x"),
                     {"r1": P, "r2": I, "sum": I}, "derived", "antiplurality-concat-top",
                     note="mirror image of the plurality counterexample"))
    add(_consistency("IIS", ("CCON", "TCON", "BCON"), X, rk(X, "{z}"), rk(X, "{x}"), ("x", "y"),
                     {"r1": I, "r2": P, "sum": I}, "published", "iis-all-sums"))
    add(_consistency("CPM", ("CCON", "TCON", "BCON"), X, rk(X, "{x} > {x,y,z}"),
                     rk(X, "{z} > {y}"), ("x", "y"), {"r1": I, "r2": I, "sum": P},
                     "published", "cpm-all-sums"))

    W = XYZW
    add(_consistency(
        "CPM", ("IP_CCON",), W, rk(W, "{z}"), rk(W, "{x,z} {x} > {y,z}"), ("x", "y"),
        {"r1": I, "r2": P, "sum": I}, "published", "cpm-ip-concat",
        disputed="the concatenation still has {x,z} above {y,z}, so x P y rather than a tie",
        replacement=_consistency(
            "CPM", ("IP_CCON",), W, rk(W, "{y,z}"), rk(W, "{x} > {y} {x,z}"), ("x", "y"),
            {"r1": I, "r2": P, "sum": I}, "derived", "cpm-ip-concat-replacement"),
    ))
    add(_consistency("CPM", ("PI_CCON",), W, rk(W, "{x} {y,z} > {x,z}"), rk(W, "{y}"),
                     ("y", "x"), {"r1": P, "r2": I, "sum": I}, "derived", "cpm-pi-concat"))
    add(_consistency(
        "CPM", ("PP_CCON",), W, rk(W, "{x} > {y} {y,w} {y,z,w} {y,z}"),
        rk(W, "{x,z} > {y,z} {x,w} {x,z,w}"), ("x", "y"), {"r1": P, "r2": P, "sum": I},
        "published", "cpm-pp-concat",
        disputed="{y,z} lies in both parts, so the parts are not disjoint and have no sum",
        replacement=_consistency(
            "CPM", ("PP_CCON",), W, rk(W, "{x} > {y} {y,w} {y,z,w}"),
            rk(W, "{x,z} > {y,z} {x,w} {x,z,w}"), ("x", "y"), {"r1": P, "r2": P, "sum": I},
            "derived", "cpm-pp-concat-replacement",
            note="drops the shared coalition from the first part"),
    ))

    # lex-cel and decomposition of the worst class
    T = ONE_TWO_THREE
    add(Fixture("L", ("IDWS",), T,
                {"ranking": rk(T, "{3} > {1} {1,3} {2}"), "decomposed": rk(T, "{3} > {2} > {1} {1,3}")},
                ("1", "2"), {"ranking": P, "decomposed": INV_P}, "published", "lexcel-idws"))

    # S lex-cel characterisation: independence
    add(Fixture("IDSL", ("IAWS",), X,
                {"ranking": rk(X, "{x}"), "extended": rk(X, "{x} > {y}")},
                ("x", "y"), {"ranking": P, "extended": INV_P}, "published", "idsl-iaws"))
    add(Fixture("L", ("AIAW",), X, {"ranking": rk(X, "{x,y} {x}")}, ("x", "y"),
                {"ranking": P}, "derived", "lexcel-aiaw"))
    add(_consistency("SP", ("CCON", "IP_CCON"), X, rk(X, "{x,y}"), rk(X, "{y}"), ("y", "x"),
                     {"r1": I, "r2": P, "sum": I}, "published", "sp-ccon",
                     note="the strict verdict in the second part favours y; the pair is read as (y, x)"))
    add(Fixture("SLNEH", ("NT",), X, {"ranking": rk(X, "{z}"), "sigma": swap(X, "x", "y")},
                ("x", "y"), {"ranking": P, "image": INV_P}, "derived", "slneh-nt"))
    add(Fixture("SSUM_SL", ("IDWS",), X,
                {"ranking": rk(X, "{x} > {y} {y,z}"), "decomposed": rk(X, "{x} > {y} > {y,z}")},
                ("x", "y"), {"ranking": P, "decomposed": INV_P}, "published", "ssum-sl-idws"))
    add(Fixture("SLUN", ("AIAW",), X, {"ranking": rk(X, "{x,y} {x}")}, ("x", "y"),
                {"ranking": P}, "published", "slun-aiaw"))
    add(Fixture("SLNE", ("NT",), X, {"ranking": rk(X, "{z}"), "sigma": swap(X, "x", "y")},
                ("x", "y"), {"ranking": P, "image": INV_P}, "derived", "slne-nt"))

    # plurality characterisation: independence
    add(Fixture("L", ("TO",), X,
                {"ranking": top_then_rest(X, "{x,y}"),
                 "other": rk(X, "{x,y} > {x}") + (everything_but(X, "{x,y} {x}"),)},
                ("x", "y"), {"ranking": I, "other": P}, "published", "lexcel-to"))
    add(_consistency(
        "SP", ("TCON",), X, top_then_rest(X, "{x}"), top_then_rest(X, "{x,y}"), ("x", "y"),
        {"r1": P, "r2": I, "sum": I}, "published", "sp-tcon",
        disputed="both parts contain every coalition, so they are not disjoint",
        replacement=_consistency("SP", ("TCON",), X, rk(X, "{x}"), rk(X, "{x,y}"), ("x", "y"),
                                 {"r1": P, "r2": I, "sum": I}, "derived", "sp-tcon-replacement",
                                 note="keeps only the two top classes"),
    ))
    add(Fixture("CONST_X", ("WUVIP",), X, {"ranking": rk(X, "{x} > {y}")}, ("x", "y"),
                {"ranking": I}, "published", "constx-wuvip"))
    A = ABCXY
    wca_rank = top_then_rest(A, "{x,a} {y,b,c}")
    wca_pi = coalition_swap(A, {"{x,a}": "{x,b,c}", "{x,b,c}": "{x,a}",
                                "{y,b,c}": "{y,a}", "{y,a}": "{y,b,c}"})
    add(Fixture("SPLIT_P", ("WCA",), A, {"ranking": wca_rank, "pi": wca_pi}, ("x", "y"),
                {"ranking": P, "image": INV_P}, "published", "split-p-wca",
                note="pi also sends the images back so that it is a bijection"))
    add(Fixture("P_TB", ("NT",), X, {"ranking": top_then_rest(X, "{x,y}"), "sigma": swap(X, "x", "y")},
                ("x", "y"), {"ranking": P, "image": INV_P}, "published", "p-tb-nt"))

    # lex-cel characterisation: independence
    add(Fixture(
        "SUM_L", ("IAWS",), X,
        {"ranking": rk(X, "{x} > {x,y}"), "extended": rk(X, "{x} > {x,y} > {y}")},
        ("x", "y"), {"ranking": P, "extended": I}, "published", "sum-l-iaws",
        disputed="totals tie at 2 but the lex-cel tie-break still gives x P y",
        replacement=Fixture("SUM_L", ("IAWS",), X,
                            {"ranking": rk(X, "{x}"), "extended": rk(X, "{x} > {y} {y,z}")},
                            ("x", "y"), {"ranking": P, "extended": INV_P}, "derived",
                            "sum-l-iaws-replacement"),
    ))
    add(Fixture("SPLIT_L", ("WCA",), A, {"ranking": wca_rank, "pi": wca_pi}, ("x", "y"),
                {"ranking": P, "image": INV_P}, "published", "split-l-wca"))
    add(Fixture("L_TB", ("NT",), X, {"ranking": top_then_rest(X, "{x,y}"), "sigma": swap(X, "x", "y")},
                ("x", "y"), {"ranking": P, "image": INV_P}, "published", "l-tb-nt"))
    return F


FIXTURES: tuple[Fixture, ...] = tuple(_fixtures())


def get_fixture(fid: str) -> Fixture:
    for f in FIXTURES:
        if f.fid == fid:
            return f
        if f.replacement is not None and f.replacement.fid == fid:
            return f.replacement
    raise KeyError(fid)


def _v(srs, roster, ranking, x, y) -> Verdict:
    return Verdict(get_srs(srs).compare(ranking, x, y, roster))


def evaluate_fixture(f: Fixture) -> FixtureOutcome:
    x, y = f.xy
    roster, ins, srs = f.roster, f.inputs, f.srs
    actual: dict[str, Any] = {}
    witnesses = []
    first = f.axioms[0]
    if first in ax.CONSISTENCY_CLAUSES:
        r1, r2 = ins["r1"], ins["r2"]
        actual["r1"] = _v(srs, roster, r1, x, y)
        actual["r2"] = _v(srs, roster, r2, x, y)
        if not sm.are_disjoint(r1, r2):
            actual["sum"] = "NOT_DISJOINT"
        else:
            for axiom in f.axioms:
                t = ax.sum_of_kind(ax.SUM_KIND[axiom], r1, r2)
                v = _v(srs, roster, t, x, y)
                label = "sum" if len(f.axioms) == 1 else f"sum[{axiom}]"
                actual[label] = v
                witnesses.append(ax.check_consistency_instance(srs, r1, r2, t, x, y, roster=roster, axiom=axiom))
            sums_ = [v for k, v in actual.items() if k.startswith("sum")]
            if len(f.axioms) > 1 and len(set(sums_)) == 1:
                actual["sum"] = sums_[0]
    elif first in ("IDWS", "IAWS", "TO"):
        other = {"IDWS": "decomposed", "IAWS": "extended", "TO": "other"}[first]
        actual["ranking"] = _v(srs, roster, ins["ranking"], x, y)
        actual[other] = _v(srs, roster, ins[other], x, y)
        check = {"IDWS": ax.check_idws_instance, "IAWS": ax.check_iaws_instance, "TO": ax.check_to_instance}[first]
        witnesses.append(check(srs, ins["ranking"], ins[other], roster=roster))
    elif first == "NT":
        sigma = ins["sigma"]
        actual["ranking"] = _v(srs, roster, ins["ranking"], x, y)
        actual["image"] = _v(srs, roster, apply_sigma(ins["ranking"], sigma), sigma[x], sigma[y])
        witnesses.append(ax.check_nt_instance(srs, ins["ranking"], sigma, roster=roster))
    elif first == "WCA":
        actual["ranking"] = _v(srs, roster, ins["ranking"], x, y)
        actual["image"] = _v(srs, roster, apply_pi(ins["ranking"], ins["pi"]), x, y)
        witnesses.append(ax.check_wca_instance(srs, ins["ranking"], ins["pi"], x, y, roster=roster))
    elif first in ("AIAW", "WUVIP"):
        actual["ranking"] = _v(srs, roster, ins["ranking"], x, y)
        check = ax.check_aiaw_instance if first == "AIAW" else ax.check_wuvip_instance
        witnesses.append(check(srs, ins["ranking"], roster=roster))
    else:  # pragma: no cover
        raise ValueError(first)

    matches = all(actual.get(k) == v for k, v in f.expected.items())
    violated = bool(witnesses) and all(w is not None for w in witnesses)
    detail = ", ".join(f"{k}={getattr(v, 'name', v)}" for k, v in actual.items())
    if f.disputed:
        rep = evaluate_fixture(f.replacement) if f.replacement is not None else None
        return FixtureOutcome(f, "DISPUTED", actual, witnesses, rep, detail)
    status = "PASS" if matches and violated else "FAIL"
    return FixtureOutcome(f, status, actual, witnesses, None, detail)


def run_fixture_suite() -> list[FixtureOutcome]:
    return [evaluate_fixture(f) for f in FIXTURES]


# --------------------------------------------------------------------------
# worked examples


def example1() -> tuple[Ranking, Ranking]:
    W = XYZW
    return (
        rk(W, "{x,y,z} {x,y} > {x} {x,z} {y} > {z} {w}"),
        rk(W, "{x,w} {y,w} {z,w}"),
    )


EXAMPLE1_TABLE = {
    # name: (theta1, sign_theta1, e1, theta2, sign_theta2, e2)
    "x": ((2, 2, 0), (1, 1, 0), 1, (1,), (1,), 0),
    "y": ((2, 1, 0), (1, 1, 0), 1, (1,), (1,), 0),
    "z": ((1, 1, 1), (1, 1, 1), 0, (1,), (1,), 0),
    "w": ((0, 0, 1), (0, 0, 1), 0, (3,), (1,), 1),
}

_CPM1_PAIRS = "xy yx xz xw yz yw zw wz"

EXAMPLE1_RELATIONS = [
    # (ranking number, srs, ordered partition or pair list)
    (1, "L", "x > y > z > w"),
    (1, "SL", "z > {x,y} > w"),
    (1, "SP", "{x,y,z} > w"),
    (1, "CPM", ("pairs", _CPM1_PAIRS)),
    (1, "P", "{x,y} > z > w"),
    (1, "AP", "{x,y} > {z,w}"),
    (1, "IIS", "{x,y} > {z,w}"),
    (2, "L", "w > {x,y,z}"),
    (2, "SL", "{x,y,z,w}"),
    (2, "CPM", "{x,y,z,w}"),
    (2, "P", "w > {x,y,z}"),
    (2, "SP", "{x,y,z,w}"),
    (2, "AP", "{x,y,z} > w"),
    (2, "IIS", "w > {x,y,z}"),
]


def example2() -> dict[str, Ranking]:
    """Symbolic classes Σ1..Σ3, Γ1, Γ2 instantiated with single coalitions."""
    W = XYZW
    s1, s2, s3 = (rk(W, t)[0] for t in ("{x}", "{y}", "{z}"))
    g1, g2 = (rk(W, t)[0] for t in ("{w}", "{x,y}"))
    return {
        "r1": (s1, s2, s3),
        "r2": (g1, g2),
        "concat": (s1, s2, s3, g1, g2),
        "top": (s1 | g1, s2 | g2, s3),
        "bottom": (s1, s2 | g1, s3 | g2),
    }


@dataclass
class Assertion:
    group: str
    name: str
    ok: bool
    detail: str = ""
    disputed: bool = False


def _pairs_relation(roster: Roster, text: str):
    pairs = {(roster.index(p[0]), roster.index(p[1])) for p in text.split()}
    return lambda a, b: a == b or (a, b) in pairs


def example1_assertions() -> list[Assertion]:
    out = []
    W = XYZW
    r1, r2 = example1()
    for name, row in EXAMPLE1_TABLE.items():
        i = W.index(name)
        got = (sc.theta(r1, i), sc.sign_theta(r1, i), sc.iis_depth(r1, i),
               sc.theta(r2, i), sc.sign_theta(r2, i), sc.iis_depth(r2, i))
        labels = ("theta1", "sign_theta1", "e1", "theta2", "sign_theta2", "e2")
        for label, want, have in zip(labels, row, got):
            out.append(Assertion("four-person-table", f"{label}({name})", want == have, f"{have}"))
    for which, srs, want_rel in EXAMPLE1_RELATIONS:
        r = r1 if which == 1 else r2
        rel = apply(srs, W, r)
        if isinstance(want_rel, tuple):
            want = _pairs_relation(W, want_rel[1])
            ok = all(rel.holds(a, b) == want(a, b) for a in range(4) for b in range(4))
        else:
            ok = rel == parse_partition(want_rel, W)
        out.append(Assertion("four-person-relations", f"{srs} on ranking {which}", ok,
                             render_ranking(r, W)))
    out.append(Assertion("four-person-relations", "class of {x,z} in ranking 1",
                         class_index(r1, W.coalition("x", "z")) == 2))
    return out


def example2_assertions() -> list[Assertion]:
    e = example2()
    W = XYZW
    out = []
    for kind in ("concat", "top", "bottom"):
        got = ax.sum_of_kind(kind, e["r1"], e["r2"])
        out.append(Assertion("disjoint-sums", f"{kind} sum", got == e[kind], render_ranking(got, W)))
        out.append(Assertion("disjoint-sums", f"{kind} sum restricts to both parts",
                             sm.is_sum_of(got, e["r1"], e["r2"])))
    return out


def fixture_assertions() -> list[Assertion]:
    out = []
    for o in run_fixture_suite():
        f = o.fixture
        if o.status == "DISPUTED":
            out.append(Assertion("fixtures", f.fid, True, f"actual: {o.detail}; {f.disputed}", disputed=True))
            rep = o.replacement
            out.append(Assertion("fixtures", rep.fixture.fid, rep.status == "PASS", rep.detail))
        else:
            out.append(Assertion("fixtures", f.fid, o.status == "PASS", o.detail))
    return out


def reproduction_report() -> list[Assertion]:
    return example1_assertions() + example2_assertions() + fixture_assertions()


