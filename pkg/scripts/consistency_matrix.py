"""Audit the main rules against the three named-sum consistencies and print a matrix."""

from __future__ import annotations

import argparse
import json

from socrank import axioms as ax
from socrank.solutions import MAIN_SRS


def print_matrix(results, rows, cols) -> None:
    cell = {(r.srs, r.axiom): ("ok" if r.passed else "VIOL") for r in results}
    width = max(len(c) for c in cols) + 2
    print("SRS".ljust(10) + "".join(c.ljust(width) for c in cols))
    for srs in rows:
        print(srs.ljust(10) + "".join(cell[(srs, c)].ljust(width) for c in cols))


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--roster-size", type=int, default=3)
    p.add_argument("--max-domain", type=int, default=4)
    p.add_argument("--axioms", default="CON,CCON,TCON,BCON")
    p.add_argument("--json", action="store_true", help="also dump witnesses as JSON")
    args = p.parse_args(argv)
    axioms = args.axioms.split(",")
    bounds = ax.SearchBounds(roster_size=args.roster_size, max_domain=args.max_domain)
    results = ax.audit_matrix(MAIN_SRS, axioms, bounds)
    print_matrix(results, MAIN_SRS, axioms)
    if args.json:
        print(json.dumps([r.as_dict() for r in results if not r.passed], indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
