"""Which of the four concatenation clauses each rule keeps, at four individuals."""

from __future__ import annotations

import argparse
import time

from consistency_matrix import print_matrix
from socrank import axioms as ax

RULES = ["IIS", "P", "DUAL_IIS", "AP", "CPM", "L", "SL"]
CLAUSES = ["II_CCON", "IP_CCON", "PI_CCON", "PP_CCON"]


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--roster-size", type=int, default=4)
    p.add_argument("--max-domain", type=int, default=5)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--rules", default=",".join(RULES))
    args = p.parse_args(argv)
    rules = args.rules.split(",")
    bounds = ax.SearchBounds(roster_size=args.roster_size, max_domain=args.max_domain)
    start = time.perf_counter()
    results = ax.audit_matrix(rules, CLAUSES, bounds, workers=args.workers)
    print_matrix(results, rules, CLAUSES)
    print(f"\n{time.perf_counter() - start:.1f}s at |X|={args.roster_size}, |D|<={args.max_domain}")
    for r in results:
        if r.witness is not None:
            print()
            print(r.witness.describe())
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
