"""Exact slope calculus for vector bundles on the Fargues-Fontaine curve
over a geometric point.

Every bundle splits as a direct sum of stable pieces O(s/r), where s/r is a
reduced rational slope and O(s/r) has rank r and degree s.  A ``Bundle`` is
therefore just a finite multiset of slopes, stored with slopes strictly
decreasing; the stored order *is* the Harder-Narasimhan filtration.  All
arithmetic is exact (integers and reduced fractions, no floats).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Union


@total_ordering
@dataclass(frozen=True)
class Slope:
    """A reduced rational s/r: the slope of the stable bundle O(s/r).

    The denominator is the rank of the stable piece, the numerator its
    degree.  Normalized on construction: gcd 1, denominator >= 1, zero is
    stored as 0/1.
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self) -> None:
        num, den = self.numerator, self.denominator
        if not isinstance(num, int) or not isinstance(den, int):
            raise TypeError(f"slope needs integer parts, got {num!r}/{den!r}")
        if den == 0:
            raise ValueError("slope denominator must be nonzero")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(abs(num), den)
        if g > 1:
            num //= g
            den //= g
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    def __lt__(self, other: "Slope") -> bool:
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __neg__(self) -> "Slope":
        return Slope(-self.numerator, self.denominator)

    def __add__(self, other: "Slope") -> "Slope":
        return Slope(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def shift(self, n: int) -> "Slope":
        """The slope after tensoring by O(n): s/r -> (s + n*r)/r."""
        return Slope(self.numerator + n * self.denominator, self.denominator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __repr__(self) -> str:
        if self.denominator == 1:
            return f"Slope({self.numerator})"
        return f"Slope({self.numerator}, {self.denominator})"


SlopeLike = Union["Slope", int, Fraction, tuple]


def as_slope(value: SlopeLike) -> Slope:
    """Coerce an int, Fraction, (s, r) pair, or Slope to a Slope."""
    if isinstance(value, Slope):
        return value
    if isinstance(value, int):
        return Slope(value)
    if isinstance(value, Fraction):
        return Slope(value.numerator, value.denominator)
    if isinstance(value, tuple) and len(value) == 2:
        return Slope(value[0], value[1])
    raise TypeError(f"cannot interpret {value!r} as a slope")


@dataclass(frozen=True)
class Bundle:
    """A formal direct sum of stable bundles, i.e. a multiset slope -> mult.

    The constructor accepts any iterable of (slope, multiplicity) pairs and
    normalizes: duplicate slopes are merged, zero multiplicities dropped,
    entries sorted by strictly decreasing slope.  The empty bundle is the
    zero bundle.  Equality is multiset equality on the canonical form.
    """

    summands: tuple = ()

    def __post_init__(self) -> None:
        merged: dict[Slope, int] = {}
        for entry in self.summands:
            slope, mult = entry
            slope = as_slope(slope)
            if not isinstance(mult, int):
                raise TypeError(f"multiplicity must be an integer, got {mult!r}")
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for slope {slope}")
            if mult:
                merged[slope] = merged.get(slope, 0) + mult
        canon = tuple(
            (s, merged[s])
            for s in sorted(merged, key=Slope.as_fraction, reverse=True)
        )
        object.__setattr__(self, "summands", canon)

    def is_zero(self) -> bool:
        return not self.summands

    def slopes(self) -> tuple[Slope, ...]:
        return tuple(s for s, _ in self.summands)

    def multiplicity(self, slope: SlopeLike) -> int:
        slope = as_slope(slope)
        for s, m in self.summands:
            if s == slope:
                return m
        return 0

    def __add__(self, other: "Bundle") -> "Bundle":
        """Direct sum."""
        return Bundle(self.summands + other.summands)

    def __repr__(self) -> str:
        if not self.summands:
            return "Bundle.zero()"
        parts = ", ".join(f"O({s.numerator}/{s.denominator})^{m}" for s, m in self.summands)
        return f"Bundle[{parts}]"

    @staticmethod
    def zero() -> "Bundle":
        return ZERO


ZERO = Bundle(())


def stable(numerator: int, denominator: int = 1, mult: int = 1) -> Bundle:
    """The semistable bundle O(numerator/denominator)^{mult}."""
    return Bundle(((Slope(numerator, denominator), mult),))


def rank(e: Bundle) -> int:
    """Sum of mult * denominator over the summands."""
    return sum(m * s.denominator for s, m in e.summands)


def degree(e: Bundle) -> int:
    """Sum of mult * numerator over the summands."""
    return sum(m * s.numerator for s, m in e.summands)


def dual(e: Bundle) -> Bundle:
    """Negate every slope.  Rank is preserved, degree negated."""
    return Bundle(tuple((-s, m) for s, m in e.summands))


def twist(e: Bundle, n: int) -> Bundle:
    """Tensor by O(n): every slope s/r becomes (s + n*r)/r."""
    return Bundle(tuple((s.shift(n), m) for s, m in e.summands))


_CUTS = {
    ">=": lambda s, t: s >= t,
    ">": lambda s, t: s > t,
    "<": lambda s, t: s < t,
    "<=": lambda s, t: s <= t,
    "==": lambda s, t: s == t,
}


def truncate(e: Bundle, cut: str, threshold: SlopeLike) -> Bundle:
    """The direct summand of e whose slopes satisfy ``slope <cut> threshold``.

    ``cut`` is one of ">=", ">", "<", "<=", "==".  Because the HN filtration
    splits, sub- and quotient truncations alike are plain sub-multisets, and
    e == truncate(e, ">", t) + truncate(e, "==", t) + truncate(e, "<", t)
    holds exactly for every threshold t.
    """
    if cut not in _CUTS:
        raise ValueError(f"unknown cut {cut!r}; expected one of {sorted(_CUTS)}")
    t = as_slope(threshold)
    keep = _CUTS[cut]
    return Bundle(tuple((s, m) for s, m in e.summands if keep(s, t)))


def tensor(a: Bundle, b: Bundle) -> Bundle:
    """Tensor product, expanded bilinearly over the stable summands.

    On stable pieces O(lam)^a (x) O(mu)^b = O(lam+mu)^{a*b*r_lam*r_mu/r_(lam+mu)};
    this is the unique rule with additive slopes, multiplicative ranks and
    bilinear degree: deg(A (x) B) = rank(A) deg(B) + rank(B) deg(A).
    """
    acc: dict[Slope, int] = {}
    for s1, m1 in a.summands:
        for s2, m2 in b.summands:
            s = s1 + s2
            # r_(lam+mu) always divides r_lam * r_mu, so this is exact
            mult = m1 * m2 * (s1.denominator * s2.denominator // s.denominator)
            acc[s] = acc.get(s, 0) + mult
    return Bundle(tuple(acc.items()))


@dataclass(frozen=True)
class HNPolygon:
    """The Harder-Narasimhan polygon: concave lattice path from (0,0) to
    (rank, degree), one segment per slope in decreasing order."""

    vertices: tuple = ((0, 0),)

    def __post_init__(self) -> None:
        v = tuple((int(x), int(y)) for x, y in self.vertices)
        if not v or v[0] != (0, 0):
            raise ValueError("polygon must start at (0, 0)")
        for (x0, _), (x1, _) in zip(v, v[1:]):
            if x1 <= x0:
                raise ValueError("polygon abscissae must strictly increase")
        slopes = [
            Fraction(y1 - y0, x1 - x0) for (x0, y0), (x1, y1) in zip(v, v[1:])
        ]
        for s0, s1 in zip(slopes, slopes[1:]):
            if not s1 < s0:
                raise ValueError("polygon must be strictly concave")
        object.__setattr__(self, "vertices", v)

    @property
    def rank(self) -> int:
        return self.vertices[-1][0]

    @property
    def degree(self) -> int:
        return self.vertices[-1][1]

    def value_at(self, x) -> Fraction:
        """Exact piecewise-linear value at x in [0, rank]."""
        x = Fraction(x)
        if x < 0 or x > self.rank:
            raise ValueError(f"abscissa {x} outside [0, {self.rank}]")
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            if x <= x1:
                return Fraction(y0) + (x - x0) * Fraction(y1 - y0, x1 - x0)
        return Fraction(self.vertices[-1][1])

    def values_at_integers(self) -> tuple:
        """Values at x = 0, 1, ..., rank; enough to recover the polygon."""
        return tuple(self.value_at(x) for x in range(self.rank + 1))


def hn_polygon(e: Bundle) -> HNPolygon:
    """Accumulate (rank, degree) of the HN pieces in decreasing slope order."""
    verts = [(0, 0)]
    x = y = 0
    for s, m in e.summands:
        x += m * s.denominator
        y += m * s.numerator
        verts.append((x, y))
    return HNPolygon(tuple(verts))


def dominates(b: Bundle, b2: Bundle) -> bool:
    """Polygon dominance with matched endpoints.

    True iff b and b2 have equal rank and degree and the HN polygon of b
    lies on or above that of b2 at every integer abscissa.  Evaluation is
    exact rational interpolation, so differing vertex sets are compared
    correctly.
    """
    if rank(b) != rank(b2) or degree(b) != degree(b2):
        return False
    p, q = hn_polygon(b), hn_polygon(b2)
    return all(p.value_at(x) >= q.value_at(x) for x in range(rank(b) + 1))


@dataclass(frozen=True)
class TorsionSheaf:
    """A torsion sheaf: for each support point, a multiset of lengths >= 1.

    Support points are opaque string labels compared by equality.  Stored
    canonically with point labels ascending and lengths descending.
    """

    stalks: tuple = ()

    def __post_init__(self) -> None:
        merged: dict[str, list[int]] = {}
        for point, lengths in self.stalks:
            if not isinstance(point, str):
                raise TypeError(f"support point must be a string, got {point!r}")
            bucket = merged.setdefault(point, [])
            for n in lengths:
                if not isinstance(n, int) or n < 1:
                    raise ValueError(f"stalk length must be an integer >= 1, got {n!r}")
                bucket.append(n)
        canon = tuple(
            (point, tuple(sorted(merged[point], reverse=True)))
            for point in sorted(merged)
            if merged[point]
        )
        object.__setattr__(self, "stalks", canon)

    def is_zero(self) -> bool:
        return not self.stalks

    def degree(self) -> int:
        """Total length, summed over all cyclic summands."""
        return sum(sum(lengths) for _, lengths in self.stalks)

    @staticmethod
    def at(point: str, *lengths: int) -> "TorsionSheaf":
        return TorsionSheaf(((point, tuple(lengths)),))
