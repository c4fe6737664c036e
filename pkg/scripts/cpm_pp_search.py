"""Targeted search for a CP-majority violation of the PP concatenation clause.

Concatenation keeps every within-part comparison, so the clause can only
break through cross comparisons: teammate sets T with T+y in the first part
and T+x in the second.  Outweighing one within-part win on each side needs
two such T, which forces at least eight coalitions in total.  This script
enumerates exactly those eight-coalition shapes on four individuals (pair
fixed to (x, y) up to relabelling) and reports the violations it finds.
"""

from __future__ import annotations

import argparse
import itertools
import time

from socrank import axioms as ax
from socrank import sums as sm
from socrank.enumeration import weak_orders
from socrank.model import Roster
from socrank.notation import render_ranking


def shapes(n: int):
    x, y = 1, 2
    others = range(0, 1 << n, 4)  # teammate sets avoiding x and y
    for s1, s2, t1, t2 in itertools.product(others, repeat=4):
        if t1 >= t2 or len({s1, t1, t2}) < 3 or len({s2, t1, t2}) < 3:
            continue
        d1 = {s1 | x, s1 | y, t1 | y, t2 | y}
        d2 = {s2 | x, s2 | y, t1 | x, t2 | x}
        if d1 & d2:
            continue
        yield sum(1 << s for s in d1), sum(1 << s for s in d2)


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--roster-size", type=int, default=4)
    p.add_argument("--limit", type=int, default=3, help="stop after this many witnesses")
    args = p.parse_args(argv)
    roster = Roster.default(args.roster_size)
    start = time.perf_counter()
    found = checked = 0
    for d1, d2 in shapes(roster.n):
        for r1 in weak_orders(d1):
            for r2 in weak_orders(d2):
                checked += 1
                t = sm.concat_sum(r1, r2)
                w = ax.check_consistency_instance("CPM", r1, r2, t, 0, 1, roster=roster, axiom="PP_CCON")
                if w is None:
                    continue
                found += 1
                print(f"witness {found}: first part  {render_ranking(r1, roster)}")
                print(f"           second part {render_ranking(r2, roster)}")
                print(f"           observed {w.as_dict()['observed']}")
                if found >= args.limit:
                    print(f"{checked} instances checked in {time.perf_counter() - start:.1f}s")
                    return 0
    print(f"{found} witnesses, {checked} instances checked in {time.perf_counter() - start:.1f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
