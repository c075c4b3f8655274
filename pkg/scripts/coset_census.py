#!/usr/bin/env python3
"""Census of parabolic double cosets in S_n.

For every pair of compositions of n, count the minimal-length double-coset
representatives, cross-check the count against the contingency-table DP,
and verify the coset sizes add up to n!.

Example:
    python3 scripts/coset_census.py 5 --top 10
"""

import argparse
import itertools
import math

from ffcalc import (
    Composition,
    YoungSubgroup,
    contingency_count,
    double_coset_size,
    min_double_coset_reps,
)


def compositions_of(n):
    for cuts in itertools.product([0, 1], repeat=n - 1):
        bounds = [0] + [i + 1 for i, c in enumerate(cuts) if c] + [n]
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("n", type=int, help="symmetric group degree (<= 7 is quick)")
    parser.add_argument("--top", type=int, default=0,
                        help="print only the pairs with the most cosets")
    args = parser.parse_args()

    rows = []
    for lc, rc in itertools.product(list(compositions_of(args.n)), repeat=2):
        left = YoungSubgroup(Composition(lc))
        right = YoungSubgroup(Composition(rc))
        reps = min_double_coset_reps(args.n, left, right)
        expected = contingency_count(lc, rc)
        total = sum(double_coset_size(w, left, right) for w in reps)
        assert len(reps) == expected, (lc, rc)
        assert total == math.factorial(args.n), (lc, rc)
        rows.append((len(reps), lc, rc))

    rows.sort(reverse=True)
    if args.top:
        rows = rows[: args.top]
    print(f"{'cosets':>7}  left / right compositions")
    for count, lc, rc in rows:
        print(f"{count:>7}  {lc} / {rc}")
    print(f"\nall pair counts match the contingency DP; sizes partition {args.n}!")


if __name__ == "__main__":
    main()
