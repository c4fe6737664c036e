"""Brute-force reference computations used as test oracles."""

from itertools import permutations, product

from socrank.model import iter_bits


def all_weak_orders_by_levels(coalitions):
    """Every weak order on ``coalitions`` via level assignments, deduplicated."""
    coalitions = list(coalitions)
    n = len(coalitions)
    seen = set()
    for levels in product(range(n), repeat=n):
        used = sorted(set(levels))
        if used != list(range(len(used))):
            continue
        classes = [0] * len(used)
        for s, lv in zip(coalitions, levels):
            classes[lv] |= 1 << s
        seen.add(tuple(classes))
    if n == 0:
        seen.add(())
    return seen


def restrict_by_hand(ranking, keep):
    out = []
    for c in ranking:
        part = 0
        for s in iter_bits(c):
            if keep >> s & 1:
                part |= 1 << s
        if part:
            out.append(part)
    return tuple(out)


def brute_force_sums(r1, r2):
    d1 = d2 = 0
    for c in r1:
        d1 |= c
    for c in r2:
        d2 |= c
    union = list(iter_bits(d1 | d2))
    return {
        r for r in all_weak_orders_by_levels(union)
        if restrict_by_hand(r, d1) == tuple(r1) and restrict_by_hand(r, d2) == tuple(r2)
    }


def weak_order_matrices(k):
    """Count reflexive, complete, transitive relations on ``k`` points."""
    pairs = [(i, j) for i in range(k) for j in range(k) if i < j]
    count = 0
    for choice in product((1, 0, -1), repeat=len(pairs)):
        rel = [[True] * k for _ in range(k)]
        for (i, j), v in zip(pairs, choice):
            rel[i][j] = v >= 0
            rel[j][i] = v <= 0
        if all(not (rel[a][b] and rel[b][c]) or rel[a][c]
               for a in range(k) for b in range(k) for c in range(k)):
            count += 1
    return count


def xy_invariant_by_filter(n, x, y):
    """Coalition permutations preserving membership of ``x`` and ``y``, by filtering."""
    coalitions = list(range(1, 1 << n))
    out = []
    for image in permutations(coalitions):
        if all((s >> x & 1) == (t >> x & 1) and (s >> y & 1) == (t >> y & 1)
               for s, t in zip(coalitions, image)):
            out.append((0,) + image)
    return out
