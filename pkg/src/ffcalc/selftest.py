"""Built-in cross-check suites: each one pits two independent computations
of the same quantity against each other on seeded random data.  Used by the
``selftest`` CLI command; the heavier exhaustive versions live in the test
suite."""

from __future__ import annotations

import math
import random

from . import banach_colmez as bc
from . import moduli, sampling, weyl


def _suite_triple_agreement(rng: random.Random, cases: int) -> int:
    failures = 0
    for _ in range(cases):
        parts = sampling.random_composition(rng)
        degs = sampling.random_degree_vector(rng, len(parts))
        explicit = moduli.d_nu(parts, degs)
        pairing = moduli.d_nu_pairing(parts, degs)
        end_deg = moduli.filtered_end_degree(zip(parts, degs))
        if not (explicit == pairing == -end_deg):
            failures += 1
    return failures


def _suite_euler(rng: random.Random, cases: int) -> int:
    failures = 0
    for _ in range(cases):
        e = sampling.random_bundle(rng, exclude_slope_zero=True)
        h0 = bc.h0_dim(e)
        h1 = bc.h1_dim(e)
        if not h0.smooth or h0.dim - h1.dim != sum(
            m * s.numerator for s, m in e.summands
        ):
            failures += 1
    return failures


def _suite_picard(rng: random.Random, cases: int) -> int:
    failures = 0
    for _ in range(cases):
        c = sampling.random_complex(rng, exclude_slope_zero=True)
        dims = bc.complex_h_dims(c)
        pic = bc.picard_dim(c)
        ok = (
            pic.smooth
            and dims.h0.smooth
            and dims.hminus1.smooth
            and pic.dim == dims.h0.dim - dims.hminus1.dim
        )
        if not ok:
            failures += 1
    return failures


def _suite_coset_counts(rng: random.Random, cases: int) -> int:
    failures = 0
    for _ in range(cases):
        n = rng.randint(2, 6)
        left = weyl.YoungSubgroup(moduli.Composition(sampling.random_composition_of(rng, n)))
        right = weyl.YoungSubgroup(moduli.Composition(sampling.random_composition_of(rng, n)))
        reps = weyl.min_double_coset_reps(n, left, right)
        expected = weyl.contingency_count(left.composition.parts, right.composition.parts)
        total = sum(weyl.double_coset_size(w, left, right) for w in reps)
        if len(reps) != expected or total != math.factorial(n):
            failures += 1
    return failures


# name -> (runner, share of the budget it receives)
SUITES = (
    ("dnu-triple-agreement", _suite_triple_agreement, 1),
    ("euler-characteristic", _suite_euler, 1),
    ("picard-identity", _suite_picard, 1),
    ("coset-counts", _suite_coset_counts, 10),
)


def run_selftest(seed: int = 0, budget: int = 1000) -> dict:
    """Run every suite with its slice of the case budget; deterministic for
    a fixed (seed, budget)."""
    if budget < 0:
        raise ValueError("budget must be >= 0")
    suites = []
    all_passed = True
    for name, runner, divisor in SUITES:
        cases = budget // divisor
        # string seeds hash stably across processes, unlike tuples
        rng = random.Random(f"{seed}:{name}")
        failures = runner(rng, cases)
        passed = failures == 0
        all_passed = all_passed and passed
        suites.append(
            {"name": name, "cases": cases, "failures": failures, "passed": passed}
        )
    return {"seed": seed, "budget": budget, "suites": suites, "all_passed": all_passed}
