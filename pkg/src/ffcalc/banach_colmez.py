"""l-dimensions and cohomological smoothness of Banach-Colmez spaces over a
geometric point.

All dimensions here are read off from slope truncations of the underlying
bundles: H^0 sees the nonnegative part, H^1 the negative part, and a
slope-zero summand is exactly the obstruction to smoothness (its sections
form a locally profinite group, which carries no l-dimension).  Two-term
complexes are handled through the identifications H^{-1}(E^*) = H^0(E^{-1})
and H^1(E^*) = H^1(E^0) plus the extension

    0 -> H^0(E^0) -> H^0(E^*) -> H^1(E^{-1}) -> 0,

so no differential is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .bundles import ZERO, Bundle, Slope, TorsionSheaf, degree, rank, truncate

_SLOPE_ZERO = Slope(0)


@dataclass(frozen=True)
class SmoothDim:
    """Outcome of a smoothness decision: smooth with an integer l-dimension,
    or not smooth (in which case no dimension is assigned)."""

    smooth: bool
    dim: Optional[int] = None

    def __post_init__(self) -> None:
        if self.smooth and not isinstance(self.dim, int):
            raise ValueError("smooth result needs an integer dimension")
        if not self.smooth and self.dim is not None:
            raise ValueError("non-smooth result carries no dimension")

    @staticmethod
    def of(dim: int) -> "SmoothDim":
        return SmoothDim(True, dim)

    @staticmethod
    def non_smooth() -> "SmoothDim":
        return SmoothDim(False, None)


@dataclass(frozen=True)
class TwoTermComplex:
    """A two-term complex of bundles in degrees [-1, 0]; either term may be
    zero.  The differential is not modeled: every dimension formula below
    depends on the terms only through their slope decompositions."""

    e_minus1: Bundle = ZERO
    e_zero: Bundle = ZERO


class ComplexDims(NamedTuple):
    hminus1: SmoothDim
    h0: SmoothDim
    h1: SmoothDim


class HomExtDims(NamedTuple):
    hom: SmoothDim
    ext: SmoothDim


def has_slope_zero_summand(e: Bundle) -> bool:
    return not truncate(e, "==", 0).is_zero()


def h0_dim(e: Bundle) -> SmoothDim:
    """H^0(E): smooth iff E has no slope-zero summand, of dimension
    deg(E^{>0}).  (H^0 only sees E^{>=0}; the slope-zero part contributes a
    profinite factor, never a dimension.)"""
    if has_slope_zero_summand(e):
        return SmoothDim.non_smooth()
    return SmoothDim.of(degree(truncate(e, ">", 0)))


def h1_dim(e: Bundle) -> SmoothDim:
    """H^1(E): always smooth, of dimension -deg(E^{<0})."""
    return SmoothDim.of(-degree(truncate(e, "<", 0)))


def complex_h_dims(c: TwoTermComplex) -> ComplexDims:
    """Hypercohomology dimensions of a two-term complex.

    H^{-1} = H^0(E^{-1}) and H^1 = H^1(E^0); H^0 sits in an extension of
    H^1(E^{-1}) by H^0(E^0), so its dimension adds up to
    deg((E^0)^{>0}) - deg((E^{-1})^{<0}) and smoothness is governed by
    slope-zero summands of E^0.
    """
    hminus1 = h0_dim(c.e_minus1)
    h1 = h1_dim(c.e_zero)
    if has_slope_zero_summand(c.e_zero):
        h0 = SmoothDim.non_smooth()
    else:
        h0 = SmoothDim.of(
            degree(truncate(c.e_zero, ">", 0)) - degree(truncate(c.e_minus1, "<", 0))
        )
    return ComplexDims(hminus1, h0, h1)


def picard_dim(c: TwoTermComplex) -> SmoothDim:
    """Dimension of the Picard v-groupoid [H^0(E^*)/H^{-1}(E^*)].

    Smooth iff E^0 has no slope-zero summand; then the dimension is
    deg((E^0)^{>=0}) - deg(E^{-1}).  Unlike the individual cohomologies,
    this is insensitive to slope-zero summands of E^{-1}: those contribute
    equally to H^{-1} and to the stabilizers.
    """
    if has_slope_zero_summand(c.e_zero):
        return SmoothDim.non_smooth()
    return SmoothDim.of(degree(truncate(c.e_zero, ">=", 0)) - degree(c.e_minus1))


def section_is_smooth_point(c: TwoTermComplex) -> bool:
    """Jacobian-style test for a section with pullback tangent complex c:
    the point is smooth iff every slope of the degree-0 term is > 0.

    Vanishing H^1 forces exactly this positivity.  The zero bundle passes
    vacuously (a degenerate section with no deformations).
    """
    return all(s > _SLOPE_ZERO for s in c.e_zero.slopes())


def torsion_h0_dim(q: TorsionSheaf) -> SmoothDim:
    """H^0 of a torsion sheaf: always smooth, of dimension deg(Q)."""
    return SmoothDim.of(q.degree())


def ext1_torsion_bundle_dim(q: TorsionSheaf, g: Bundle) -> SmoothDim:
    """Ext^1(Q, G) for Q torsion and G a bundle: always smooth, of
    dimension deg(Q) * rank(G)."""
    return SmoothDim.of(q.degree() * rank(g))


def torsion_hom_ext_dims(q1: TorsionSheaf, q2: TorsionSheaf) -> HomExtDims:
    """Hom(Q1, Q2) and Ext^1(Q1, Q2) for torsion sheaves.

    Both are smooth of the *same* dimension: summing min(m1, m2) over pairs
    of cyclic summands supported at a common point.  Cyclic pieces at
    distinct points contribute nothing.
    """
    lengths2 = dict(q2.stalks)
    total = 0
    for point, lengths1 in q1.stalks:
        for m1 in lengths1:
            for m2 in lengths2.get(point, ()):
                total += min(m1, m2)
    return HomExtDims(SmoothDim.of(total), SmoothDim.of(total))
