"""Command-line interface.

::

    socrank rank --srs L ranking.txt
    socrank explain --srs SL ranking.txt x y
    socrank sum top a.txt b.txt
    socrank audit --srs P --axiom CCON,TCON,BCON --max-domain 4 --json
    socrank repro

Errors are reported on stderr as ``CODE: message`` with exit status 2.
Axiom violations found by ``audit`` are report content and exit 0.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from socrank import axioms as ax
from socrank import sums as sm
from socrank.errors import SocrankError, ValidationError
from socrank.fixtures import reproduction_report
from socrank.notation import parse_document, render_ranking, render_relation
from socrank.solutions import SRS_NAMES, apply, explain, get_srs


def _read(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_document(text)


def _names(value: str, universe, normalize) -> list[str]:
    if value.strip().lower() == "all":
        return list(universe)
    return [normalize(v) for v in value.split(",") if v.strip()]


def cmd_rank(args) -> int:
    doc = _read(args.file)
    rel = apply(args.srs, doc.roster, doc.ranking)
    print(render_relation(rel, doc.roster))
    return 0


def cmd_explain(args) -> int:
    doc = _read(args.file)
    r = doc.roster
    ex = explain(args.srs, r, doc.ranking, r.index(args.x), r.index(args.y))
    d = ex.as_dict(r)
    if args.json:
        print(json.dumps(d, sort_keys=True))
        return 0
    print(f"{args.x} {d['verdict']} {args.y} under {d['srs']}")
    for label, (a, b) in d["consulted"].items():
        print(f"  {label}: {args.x}={a} {args.y}={b}")
    if d["first_difference"] is not None:
        print(f"  first difference at position {d['first_difference']}")
    if d["tiebreak_used"]:
        print("  decided by the tie-break order")
    if d["note"]:
        print(f"  {d['note']}")
    return 0


def cmd_sum(args) -> int:
    a, b = _read(args.file1), _read(args.file2)
    if a.roster.individuals != b.roster.individuals:
        raise ValidationError("BAD_ROSTER", "both files must declare the same roster")
    roster = a.roster
    if args.kind == "all":
        count = 0
        for t in sm.enumerate_sums(a.ranking, b.ranking):
            print(render_ranking(t, roster))
            count += 1
        print(f"count={count}")
        return 0
    print(render_ranking(ax.sum_of_kind(args.kind, a.ranking, b.ranking), roster))
    return 0


def cmd_audit(args) -> int:
    srs_list = _names(args.srs, SRS_NAMES, lambda s: get_srs(s).name)
    axiom_list = _names(args.axiom, ax.AXIOM_NAMES, ax.get_axiom)
    bounds = ax.SearchBounds(
        roster_size=args.roster_size,
        max_domain=args.max_domain,
        max_classes=args.max_classes,
        mode=args.mode,
        seed=args.seed,
        trials=args.trials,
    )
    results = ax.audit_matrix(srs_list, axiom_list, bounds, workers=args.workers)
    if args.json:
        print(json.dumps([r.as_dict() for r in results], sort_keys=True, indent=2))
        return 0
    for r in results:
        print(f"{r.srs:8} {r.axiom:8} {r.status}  ({r.instances} instances, {r.elapsed_ms:.0f} ms)")
        if r.witness is not None:
            print("  " + r.witness.describe().replace("\n", "\n  "))
    return 0


def cmd_repro(args) -> int:
    report = reproduction_report()
    failed = [a for a in report if not a.ok and not a.disputed]
    disputed = [a for a in report if a.disputed]
    if args.json:
        rows = [
            {"group": a.group, "name": a.name, "ok": a.ok, "disputed": a.disputed, "detail": a.detail}
            for a in report
        ]
        print(json.dumps({"assertions": rows, "failed": len(failed), "disputed": len(disputed)},
                         sort_keys=True, indent=2))
    else:
        for a in report:
            tag = "DISPUTED" if a.disputed else ("ok" if a.ok else "FAIL")
            line = f"[{tag}] {a.group}: {a.name}"
            print(line + (f"  ({a.detail})" if a.detail else ""))
        print(f"{len(report)} assertions, {len(failed)} failed, {len(disputed)} disputed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="socrank", description="Social ranking solutions and axiom audits.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("rank", help="print the social relation of a ranking")
    q.add_argument("--srs", required=True)
    q.add_argument("file", help="ranking file, or - for stdin")
    q.set_defaults(func=cmd_rank)

    q = sub.add_parser("explain", help="show which scores decide one pair")
    q.add_argument("--srs", required=True)
    q.add_argument("--json", action="store_true")
    q.add_argument("file")
    q.add_argument("x")
    q.add_argument("y")
    q.set_defaults(func=cmd_explain)

    q = sub.add_parser("sum", help="combine two disjoint rankings")
    q.add_argument("kind", choices=["concat", "top", "bottom", "all"])
    q.add_argument("file1")
    q.add_argument("file2")
    q.set_defaults(func=cmd_sum)

    q = sub.add_parser("audit", help="bounded search for axiom violations")
    q.add_argument("--srs", default="all", help="comma-separated names or 'all'")
    q.add_argument("--axiom", default="all", help="comma-separated names or 'all'")
    q.add_argument("--roster-size", type=int, default=3)
    q.add_argument("--max-domain", type=int, default=3)
    q.add_argument("--max-classes", type=int, default=None)
    q.add_argument("--mode", choices=[ax.EXHAUSTIVE, ax.SAMPLED], default=ax.EXHAUSTIVE)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--trials", type=int, default=10_000)
    q.add_argument("--workers", type=int, default=1)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_audit)

    q = sub.add_parser("repro", help="replay the worked examples and counterexample fixtures")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_repro)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SocrankError, ValueError, OSError) as exc:
        code = getattr(exc, "code", type(exc).__name__)
        msg = str(exc)
        print(msg if msg.startswith(code) else f"{code}: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
