"""Every registered rule against the single-ranking axioms and the two key sums."""

from __future__ import annotations

import argparse

from consistency_matrix import print_matrix
from socrank import axioms as ax
from socrank.solutions import SRS_NAMES

AXIOMS = ["NT", "WCA", "IDWS", "IAWS", "TO", "AIAW", "WUVIP", "CCON", "TCON"]


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--roster-size", type=int, default=3)
    p.add_argument("--max-domain", type=int, default=3)
    p.add_argument("--mode", choices=[ax.EXHAUSTIVE, ax.SAMPLED], default=ax.EXHAUSTIVE)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=5000)
    args = p.parse_args(argv)
    bounds = ax.SearchBounds(
        roster_size=args.roster_size,
        max_domain=args.max_domain,
        mode=args.mode,
        seed=args.seed,
        trials=args.trials,
    )
    results = ax.audit_matrix(SRS_NAMES, AXIOMS, bounds)
    print_matrix(results, SRS_NAMES, AXIOMS)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
