"""Dimension formulas for moduli stacks of G-bundles on the curve and their
parabolic, compactified, and relative-position strata (GL_n combinatorics).

A connected component of the stack of parabolic reductions is indexed by a
composition (h_1, ..., h_k) of n (the Levi block ranks) together with a
degree tuple (d_1, ..., d_k).  Its dimension d_nu admits three computations
that must agree:

  * the explicit pairwise sum  sum_{j>i} (h_i d_j - h_j d_i),
  * the root-theoretic pairing <2 rho, mu> against the slope cocharacter,
  * minus the degree of the flag-preserving endomorphism bundle.

Strata of pairs of parabolic reductions in a fixed relative position are
indexed by a bifiltration rank/degree matrix and carry the analogous double
sum.  The stack of all G-bundles itself has dimension zero: the adjoint
bundle is self-dual, hence of degree zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .banach_colmez import TwoTermComplex, picard_dim
from .bundles import ZERO, Bundle, degree, dual, tensor


@dataclass(frozen=True)
class Composition:
    """Positive integers (h_1, ..., h_k); n is their sum."""

    parts: tuple

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise ValueError("a composition needs at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be >= 1, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class DegreeVector:
    """Integers (d_1, ..., d_k), paired with a composition of equal length."""

    degrees: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))

    def __len__(self) -> int:
        return len(self.degrees)


@dataclass(frozen=True)
class GradedFlagData:
    """(rank, degree) pairs of the graded pieces of a flag or quasi-flag.

    Rank-0 pieces with nonzero degree are allowed: they encode torsion
    quotients of quasi-flags and enter the degree sums like any other piece.
    """

    pieces: tuple

    def __post_init__(self) -> None:
        pieces = tuple((int(h), int(d)) for h, d in self.pieces)
        if not pieces:
            raise ValueError("flag data needs at least one graded piece")
        if any(h < 0 for h, _ in pieces):
            raise ValueError("graded piece ranks must be >= 0")
        object.__setattr__(self, "pieces", pieces)


@dataclass(frozen=True)
class BifiltrationData:
    """Rank and degree matrices (h_ij), (d_ij) of a bifiltration, with the
    marginal tuples they must sum to.

    Rows are indexed by the first flag's graded pieces, columns by the
    second's.  Only shape coherence is enforced here; the marginal equations
    are checked by ``validate_bifiltration``, which reports violations as
    data rather than raising.
    """

    h: tuple
    d: tuple
    row_ranks: tuple
    col_ranks: tuple
    row_degs: tuple
    col_degs: tuple

    def __post_init__(self) -> None:
        h = tuple(tuple(int(x) for x in row) for row in self.h)
        d = tuple(tuple(int(x) for x in row) for row in self.d)
        if not h or not h[0]:
            raise ValueError("bifiltration matrices must be nonempty")
        k, kp = len(h), len(h[0])
        if any(len(row) != kp for row in h) or len(d) != k or any(len(row) != kp for row in d):
            raise ValueError("rank and degree matrices must share a rectangular shape")
        row_ranks = tuple(int(x) for x in self.row_ranks)
        col_ranks = tuple(int(x) for x in self.col_ranks)
        row_degs = tuple(int(x) for x in self.row_degs)
        col_degs = tuple(int(x) for x in self.col_degs)
        if len(row_ranks) != k or len(row_degs) != k:
            raise ValueError(f"row marginals must have length {k}")
        if len(col_ranks) != kp or len(col_degs) != kp:
            raise ValueError(f"column marginals must have length {kp}")
        for name, value in (("h", h), ("d", d), ("row_ranks", row_ranks),
                            ("col_ranks", col_ranks), ("row_degs", row_degs),
                            ("col_degs", col_degs)):
            object.__setattr__(self, name, value)

    @property
    def shape(self) -> tuple:
        return (len(self.h), len(self.h[0]))

    @staticmethod
    def from_matrices(h: Sequence[Sequence[int]], d: Sequence[Sequence[int]]) -> "BifiltrationData":
        """Build consistent data by reading the marginals off the matrices."""
        return BifiltrationData(
            h=tuple(tuple(row) for row in h),
            d=tuple(tuple(row) for row in d),
            row_ranks=tuple(sum(row) for row in h),
            col_ranks=tuple(sum(col) for col in zip(*h)),
            row_degs=tuple(sum(row) for row in d),
            col_degs=tuple(sum(col) for col in zip(*d)),
        )


@dataclass(frozen=True)
class MarginalViolation:
    """A single failed constraint of a BifiltrationData instance."""

    kind: str  # "row-rank" | "col-rank" | "row-deg" | "col-deg" | "negative-rank-entry"
    index: int  # 1-based row or column index
    expected: int
    actual: int

    def __str__(self) -> str:
        return (f"{self.kind} violation at index {self.index}: "
                f"expected {self.expected}, got {self.actual}")


PartsLike = Union[Composition, Sequence[int]]
DegreesLike = Union[DegreeVector, Sequence[int]]


def _parts(h: PartsLike) -> tuple:
    return h.parts if isinstance(h, Composition) else Composition(tuple(h)).parts


def _degrees(d: DegreesLike) -> tuple:
    return d.degrees if isinstance(d, DegreeVector) else tuple(int(x) for x in d)


def _matched(h: PartsLike, d: DegreesLike) -> tuple:
    parts, degs = _parts(h), _degrees(d)
    if len(parts) != len(degs):
        raise ValueError(
            f"length mismatch: {len(parts)} rank parts vs {len(degs)} degrees"
        )
    return parts, degs


def d_nu(h: PartsLike, d: DegreesLike) -> int:
    """The pairwise sum  sum_{j>i} (h_i d_j - h_j d_i)."""
    parts, degs = _matched(h, d)
    k = len(parts)
    total = 0
    for i in range(k):
        for j in range(i + 1, k):
            total += parts[i] * degs[j] - parts[j] * degs[i]
    return total


def d_nu_pairing(h: PartsLike, d: DegreesLike) -> int:
    """The same dimension computed as the pairing <2 rho, mu>.

    mu is the block-constant slope cocharacter (d_b/h_b repeated h_b times,
    in block order, exact rationals via a common denominator).  Positive
    roots are taken as e_j - e_i for i < j, so 2 rho has coordinates
    2p - n - 1 at position p; this is the sign convention under which
    block-increasing slopes pair positively.  The Levi part pairs to zero
    because the blocks of mu are constant; that is asserted, not assumed.
    """
    parts, degs = _matched(h, d)
    n = sum(parts)
    common = math.lcm(*parts)
    # mu scaled by the common denominator, one coordinate per position
    mu = []
    for hb, db in zip(parts, degs):
        mu.extend([db * (common // hb)] * hb)

    total = sum((2 * p - n - 1) * mu[p - 1] for p in range(1, n + 1))

    # <2 rho_M, mu> = 0: within block b the coordinate of 2 rho_M at local
    # position q is 2q - h_b - 1
    start = 0
    for hb in parts:
        block = mu[start:start + hb]
        levi = sum((2 * q - hb - 1) * block[q - 1] for q in range(1, hb + 1))
        assert levi == 0, "Levi pairing must vanish on a semistable blockwise slope"
        start += hb

    assert total % common == 0, "root pairing of a slope cocharacter must be integral"
    return total // common


def filtered_end_degree(gr: Union[GradedFlagData, Iterable]) -> int:
    """Degree of the flag-preserving endomorphism bundle of a (quasi-)flag
    with the given graded pieces:  sum_{i<j} (h_j d_i - h_i d_j).

    The filtration-compatible endomorphisms admit a filtration with graded
    pieces Hom(gr_j, gr_i) for i <= j; the i == j terms have degree zero and
    the rest sum to minus the stratum dimension of the matching component.
    """
    pieces = gr.pieces if isinstance(gr, GradedFlagData) else GradedFlagData(tuple(gr)).pieces
    k = len(pieces)
    total = 0
    for i in range(k):
        for j in range(i + 1, k):
            hi, di = pieces[i]
            hj, dj = pieces[j]
            total += hj * di - hi * dj
    return total


def bun_p_stratum_dim(h: PartsLike, d: DegreesLike) -> int:
    """Dimension of the connected component of parabolic reductions with
    Levi ranks h and degrees d.  All three computations are carried out and
    must agree."""
    parts, degs = _matched(h, d)
    explicit = d_nu(parts, degs)
    pairing = d_nu_pairing(parts, degs)
    end_deg = filtered_end_degree(zip(parts, degs))
    assert explicit == pairing == -end_deg, (
        f"dimension routes disagree: sum={explicit} pairing={pairing} -end={-end_deg}"
    )
    return explicit


def laumon_stratum_dim(h: PartsLike, d: DegreesLike) -> int:
    """Dimension of the quasi-flag (Laumon) stratum with fixed graded
    degrees; it coincides with the open flag stratum's dimension."""
    return bun_p_stratum_dim(h, d)


def bun_g_dim(e: Bundle) -> int:
    """Dimension of the stack of rank-n bundles at the point e: always 0.

    The tangent complex is the shifted endomorphism bundle End(e)[1], and
    End(e) = e^v (x) e is self-dual of degree zero, so the Picard groupoid
    [H^1(End e)/H^0(End e)] has dimension -deg(End e) = 0.
    """
    if e.is_zero():
        raise ValueError("the zero bundle is not a point of any Bun_GL(n)")
    endo = tensor(dual(e), e)
    assert degree(endo) == 0, "endomorphism bundles are self-dual, degree 0"
    result = picard_dim(TwoTermComplex(e_minus1=endo, e_zero=ZERO))
    assert result.smooth
    return result.dim


def validate_bifiltration(b: BifiltrationData) -> list:
    """Check the four marginal systems (row/column sums of the rank and
    degree matrices) plus nonnegativity of rank entries.  Violations are
    returned as data; an empty list means the instance is consistent."""
    violations: list[MarginalViolation] = []
    k, kp = b.shape
    for i in range(k):
        for j in range(kp):
            if b.h[i][j] < 0:
                violations.append(
                    MarginalViolation("negative-rank-entry", i + 1, 0, b.h[i][j])
                )
    for i in range(k):
        actual = sum(b.h[i])
        if actual != b.row_ranks[i]:
            violations.append(MarginalViolation("row-rank", i + 1, b.row_ranks[i], actual))
    for j in range(kp):
        actual = sum(b.h[i][j] for i in range(k))
        if actual != b.col_ranks[j]:
            violations.append(MarginalViolation("col-rank", j + 1, b.col_ranks[j], actual))
    for i in range(k):
        actual = sum(b.d[i])
        if actual != b.row_degs[i]:
            violations.append(MarginalViolation("row-deg", i + 1, b.row_degs[i], actual))
    for j in range(kp):
        actual = sum(b.d[i][j] for i in range(k))
        if actual != b.col_degs[j]:
            violations.append(MarginalViolation("col-deg", j + 1, b.col_degs[j], actual))
    return violations


def relpos_stratum_dim(b: BifiltrationData) -> int:
    """Dimension of the stratum of bundle pairs with bifiltration data b:

        sum over i <= p, j <= q of  (h_ij d_pq - h_pq d_ij).

    Raises if the marginal systems do not hold, naming the failing row or
    column.
    """
    violations = validate_bifiltration(b)
    if violations:
        raise ValueError(
            "inconsistent bifiltration data: " + "; ".join(str(v) for v in violations)
        )
    k, kp = b.shape
    total = 0
    for i in range(k):
        for p in range(i, k):
            for j in range(kp):
                for q in range(j, kp):
                    total += b.h[i][j] * b.d[p][q] - b.h[p][q] * b.d[i][j]
    return total
