"""Shared hypothesis strategies for the domain types."""

from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from ffcalc import Bundle, Composition, Slope, TorsionSheaf, TwoTermComplex

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def slopes(draw, max_denominator=4, bound=3):
    r = draw(st.integers(1, max_denominator))
    s = draw(st.integers(-bound * r, bound * r))
    return Slope(s, r)


@st.composite
def bundles(draw, max_summands=4, max_mult=3, allow_zero=True, exclude_slope_zero=False):
    n = draw(st.integers(0 if allow_zero else 1, max_summands))
    pairs = []
    for _ in range(n):
        s = draw(slopes())
        if exclude_slope_zero and s == Slope(0):
            continue
        pairs.append((s, draw(st.integers(1, max_mult))))
    return Bundle(tuple(pairs))


@st.composite
def complexes(draw, **kwargs):
    return TwoTermComplex(draw(bundles(**kwargs)), draw(bundles(**kwargs)))


@st.composite
def torsion_sheaves(draw, max_points=3):
    points = draw(
        st.lists(st.sampled_from(["x0", "x1", "x2", "y"]), max_size=max_points, unique=True)
    )
    stalks = []
    for p in points:
        lengths = draw(st.lists(st.integers(1, 6), min_size=1, max_size=3))
        stalks.append((p, tuple(lengths)))
    return TorsionSheaf(tuple(stalks))


@st.composite
def compositions(draw, max_k=4, max_part=4):
    return Composition(
        tuple(draw(st.lists(st.integers(1, max_part), min_size=1, max_size=max_k)))
    )


@st.composite
def rationals(draw, max_denominator=6, bound=4):
    r = draw(st.integers(1, max_denominator))
    s = draw(st.integers(-bound * r, bound * r))
    return Fraction(s, r)
