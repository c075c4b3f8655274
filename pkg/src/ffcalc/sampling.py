"""Seeded random generators for bundles, complexes, torsion sheaves, and
composition data.  Everything draws from a caller-supplied random.Random so
runs are reproducible."""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache

from .bundles import Bundle, Slope, TorsionSheaf
from .banach_colmez import TwoTermComplex


@lru_cache(maxsize=None)
def slope_pool(max_denominator: int, slope_bound: int, exclude_zero: bool = False) -> tuple:
    """All reduced slopes s/r with 1 <= r <= max_denominator and
    |s/r| <= slope_bound, sorted decreasing."""
    seen = set()
    for r in range(1, max_denominator + 1):
        for s in range(-slope_bound * r, slope_bound * r + 1):
            if math.gcd(abs(s), r) == 1:
                seen.add(Slope(s, r))
    if exclude_zero:
        seen.discard(Slope(0))
    return tuple(sorted(seen, key=Slope.as_fraction, reverse=True))


def random_bundle(
    rng: random.Random,
    max_rank: int = 6,
    max_denominator: int = 4,
    slope_bound: int = 3,
    exclude_slope_zero: bool = False,
    allow_zero: bool = True,
) -> Bundle:
    """A bundle of rank <= max_rank with slopes from the bounded pool."""
    pool = slope_pool(max_denominator, slope_bound, exclude_slope_zero)
    target = rng.randint(0 if allow_zero else 1, max_rank)
    picked = []
    remaining = target
    while remaining > 0:
        candidates = [s for s in pool if s.denominator <= remaining]
        s = rng.choice(candidates)
        picked.append((s, 1))
        remaining -= s.denominator
    return Bundle(tuple(picked))


def random_complex(rng: random.Random, **kwargs) -> TwoTermComplex:
    return TwoTermComplex(
        e_minus1=random_bundle(rng, **kwargs),
        e_zero=random_bundle(rng, **kwargs),
    )


def random_torsion(
    rng: random.Random,
    max_points: int = 3,
    max_summands: int = 3,
    max_length: int = 5,
    labels: tuple = ("x0", "x1", "x2", "x3"),
) -> TorsionSheaf:
    stalks = []
    for point in rng.sample(labels, rng.randint(0, max_points)):
        lengths = tuple(
            rng.randint(1, max_length) for _ in range(rng.randint(1, max_summands))
        )
        stalks.append((point, lengths))
    return TorsionSheaf(tuple(stalks))


def random_composition(rng: random.Random, max_k: int = 4, max_part: int = 4) -> tuple:
    return tuple(rng.randint(1, max_part) for _ in range(rng.randint(1, max_k)))


def random_degree_vector(rng: random.Random, k: int, bound: int = 5) -> tuple:
    return tuple(rng.randint(-bound, bound) for _ in range(k))


def random_composition_of(rng: random.Random, n: int) -> tuple:
    """A uniformly random composition of n (random subset of cut points)."""
    cuts = sorted(i for i in range(1, n) if rng.random() < 0.5)
    bounds = [0] + cuts + [n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def random_monotone_case(
    rng: random.Random,
    increasing: bool,
    max_k: int = 4,
    max_part: int = 4,
    bound: int = 6,
) -> tuple:
    """A composition/degree pair whose block slopes d_i/h_i are strictly
    monotone; at least two blocks, so the pairwise sums are nonempty."""
    while True:
        k = rng.randint(2, max_k)
        parts = tuple(rng.randint(1, max_part) for _ in range(k))
        degs = tuple(rng.randint(-bound, bound) for _ in range(k))
        ratios = [Fraction(d, h) for h, d in zip(parts, degs)]
        if len(set(ratios)) != k:
            continue
        order = sorted(range(k), key=lambda i: ratios[i], reverse=not increasing)
        return tuple(parts[i] for i in order), tuple(degs[i] for i in order)
