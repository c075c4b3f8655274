"""Symmetric-group combinatorics for the Bruhat stratification: lengths,
the subword order, minimal-length representatives of parabolic double
cosets, and the correspondence between double cosets and contingency
matrices of bifiltration ranks.

Permutations act on {1, ..., n} and are written in one-line notation
[w(1), ..., w(n)].  Composition is (u * v)(i) = u(v(i)), so the simple
transposition s_i swaps *values* i, i+1 when multiplied on the left and
*positions* i, i+1 when multiplied on the right.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .moduli import Composition

#: Full double-coset enumeration walks all of S_n; refuse beyond this.
MAX_ENUM_N = 10


@dataclass(frozen=True)
class WeylElement:
    """A permutation of {1..n} in one-line notation.

    >>> WeylElement((2, 1, 3)).inverse()
    WeylElement(one_line=(2, 1, 3))
    """

    one_line: tuple

    def __post_init__(self) -> None:
        w = tuple(int(x) for x in self.one_line)
        n = len(w)
        if n == 0 or sorted(w) != list(range(1, n + 1)):
            raise ValueError(f"{w} is not a permutation of 1..{n} in one-line notation")
        object.__setattr__(self, "one_line", w)

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.n != other.n:
            raise ValueError("cannot compose permutations of different sizes")
        return WeylElement(tuple(self.one_line[j - 1] for j in other.one_line))

    def inverse(self) -> "WeylElement":
        inv = [0] * self.n
        for i, v in enumerate(self.one_line, start=1):
            inv[v - 1] = i
        return WeylElement(tuple(inv))

    @staticmethod
    def identity(n: int) -> "WeylElement":
        return WeylElement(tuple(range(1, n + 1)))


WeylLike = Union[WeylElement, Sequence[int]]


def _one_line(w: WeylLike) -> tuple:
    return w.one_line if isinstance(w, WeylElement) else WeylElement(tuple(w)).one_line


@dataclass(frozen=True)
class YoungSubgroup:
    """The block-permutation subgroup S_{h_1} x ... x S_{h_k} of S_n."""

    composition: Composition

    def __post_init__(self) -> None:
        comp = self.composition
        if not isinstance(comp, Composition):
            comp = Composition(tuple(comp))
            object.__setattr__(self, "composition", comp)

    @property
    def n(self) -> int:
        return self.composition.n

    def blocks(self) -> list:
        """The blocks as ranges of {1..n}, in order."""
        out, start = [], 1
        for h in self.composition.parts:
            out.append(range(start, start + h))
            start += h
        return out

    def block_index(self) -> tuple:
        """block_index()[v-1] is the (0-based) block containing the value v."""
        idx = []
        for b, block in enumerate(self.blocks()):
            idx.extend([b] * len(block))
        return tuple(idx)

    def internal_reflections(self) -> frozenset:
        """Indices i of the simple reflections s_i lying in the subgroup:
        all i in 1..n-1 except the cut points between blocks."""
        cuts = set(itertools.accumulate(self.composition.parts))
        return frozenset(i for i in range(1, self.n) if i not in cuts)

    def order(self) -> int:
        return math.prod(math.factorial(h) for h in self.composition.parts)

    def elements(self) -> Iterator[WeylElement]:
        """All elements, as products of independent block permutations."""
        per_block = [list(itertools.permutations(block)) for block in self.blocks()]
        for choice in itertools.product(*per_block):
            yield WeylElement(tuple(itertools.chain.from_iterable(choice)))


def length(w: WeylLike) -> int:
    """Coxeter length = number of inversions.

    >>> length((3, 2, 1))
    3
    """
    line = _one_line(w)
    n = len(line)
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if line[i] > line[j]
    )


def reduced_word(w: WeylLike) -> tuple:
    """A reduced word (a_1, ..., a_m) with w = s_{a_1} ... s_{a_m}.

    Produced by inversion sorting: repeatedly strip the smallest right
    descent, so the output is deterministic.
    """
    line = list(_one_line(w))
    n = len(line)
    stripped = []
    while True:
        for i in range(n - 1):
            if line[i] > line[i + 1]:
                line[i], line[i + 1] = line[i + 1], line[i]
                stripped.append(i + 1)
                break
        else:
            break
    return tuple(reversed(stripped))


def _compatible(u: WeylLike, w: WeylLike) -> tuple:
    lu, lw = _one_line(u), _one_line(w)
    if len(lu) != len(lw):
        raise ValueError(
            f"size mismatch: permutations of {len(lu)} and {len(lw)} letters"
        )
    return lu, lw


def bruhat_leq(u: WeylLike, w: WeylLike) -> bool:
    """True iff u is below w in the subword order: some (equivalently any)
    reduced word of w contains a reduced word of u as a subword.

    Decided by the one-pass scan over a fixed reduced word of w, processed
    right to left: whenever the current letter is a right descent of the
    residual element, use it.  u <= w iff the residual ends at the identity.

    >>> bruhat_leq((1, 2, 3), (3, 2, 1))
    True
    """
    lu, lw = _compatible(u, w)
    residual = list(lu)
    for a in reversed(reduced_word(lw)):
        if residual[a - 1] > residual[a]:
            residual[a - 1], residual[a] = residual[a], residual[a - 1]
    return all(residual[i] == i + 1 for i in range(len(residual)))


def _young_pair(n: int, left: YoungSubgroup, right: YoungSubgroup) -> None:
    if left.n != n or right.n != n:
        raise ValueError(
            f"size mismatch: compositions sum to {left.n} and {right.n}, expected {n}"
        )


def is_minimal_rep(w: WeylLike, left: YoungSubgroup, right: YoungSubgroup) -> bool:
    """True iff w has minimal length in its double coset W_left * w * W_right.

    Descent criterion: no s in the left subgroup shortens w from the left
    (values i, i+1 in a common left block appear in order) and no s in the
    right subgroup shortens it from the right (w increases on each right
    block).
    """
    line = _one_line(w)
    n = len(line)
    _young_pair(n, left, right)
    position = [0] * n
    for i, v in enumerate(line, start=1):
        position[v - 1] = i
    for i in left.internal_reflections():
        if position[i - 1] > position[i]:
            return False
    for i in right.internal_reflections():
        if line[i - 1] > line[i]:
            return False
    return True


def min_double_coset_reps(n: int, left: YoungSubgroup, right: YoungSubgroup) -> list:
    """The minimal-length representatives of W_left \\ S_n / W_right, in
    lexicographic one-line order; exactly one per double coset."""
    _young_pair(n, left, right)
    if n > MAX_ENUM_N:
        raise ValueError(f"n = {n} exceeds the enumeration cap {MAX_ENUM_N}")
    left_internal = left.internal_reflections()
    right_internal = right.internal_reflections()
    reps = []
    for line in itertools.permutations(range(1, n + 1)):
        position = [0] * n
        for i, v in enumerate(line, start=1):
            position[v - 1] = i
        if any(position[i - 1] > position[i] for i in left_internal):
            continue
        if any(line[i - 1] > line[i] for i in right_internal):
            continue
        reps.append(WeylElement(line))
    return reps


def matrix_from_rep(w: WeylLike, left: YoungSubgroup, right: YoungSubgroup) -> tuple:
    """The contingency matrix of the double coset of w:
    h_ij = #{a in right block j with w(a) in left block i}.

    Constant on double cosets; row sums are the left composition and column
    sums the right one.
    """
    line = _one_line(w)
    n = len(line)
    _young_pair(n, left, right)
    left_idx = left.block_index()
    right_idx = right.block_index()
    k, kp = len(left.composition.parts), len(right.composition.parts)
    h = [[0] * kp for _ in range(k)]
    for a in range(1, n + 1):
        h[left_idx[line[a - 1] - 1]][right_idx[a - 1]] += 1
    return tuple(tuple(row) for row in h)


def coset_rep_from_matrix(h: Sequence[Sequence[int]]) -> WeylElement:
    """The minimal-length double-coset representative whose contingency
    matrix is h; inverse to ``matrix_from_rep`` on minimal representatives.

    Row sums give the left composition, column sums the right one.  The
    representative sends the elements of right block j, taken in order, to
    the slots that left block i reserves for column j, again in order; this
    leaves no descents inside any block on either side.
    """
    rows = [tuple(int(x) for x in row) for row in h]
    if not rows or not rows[0]:
        raise ValueError("matrix must be nonempty")
    kp = len(rows[0])
    if any(len(row) != kp for row in rows):
        raise ValueError("matrix rows must have equal length")
    if any(x < 0 for row in rows for x in row):
        raise ValueError("matrix entries must be nonnegative")
    row_sums = [sum(row) for row in rows]
    col_sums = [sum(row[j] for row in rows) for j in range(kp)]
    if any(s == 0 for s in row_sums) or any(s == 0 for s in col_sums):
        raise ValueError("zero row or column sum does not define a composition")
    n = sum(row_sums)

    # next free slot inside each left block / next unused element of each
    # right block
    target_cursor = list(itertools.accumulate([1] + row_sums[:-1]))
    source_cursor = list(itertools.accumulate([1] + col_sums[:-1]))
    line = [0] * n
    for i in range(len(rows)):
        for j in range(kp):
            for _ in range(rows[i][j]):
                line[source_cursor[j] - 1] = target_cursor[i]
                source_cursor[j] += 1
                target_cursor[i] += 1
    return WeylElement(tuple(line))


def double_coset_size(w: WeylLike, left: YoungSubgroup, right: YoungSubgroup) -> int:
    """|W_left * w * W_right|, by orbit-stabilizer: the stabilizer of w in
    W_left x W_right is the cellwise permutation group of the contingency
    matrix, of order prod h_ij!."""
    h = matrix_from_rep(w, left, right)
    cells = math.prod(math.factorial(x) for row in h for x in row)
    return left.order() * right.order() // cells


def contingency_count(row_sums: Sequence[int], col_sums: Sequence[int]) -> int:
    """Number of nonnegative integer matrices with the given row and column
    sums, by dynamic programming over rows.  This equals the number of
    parabolic double cosets for the matching Young subgroups."""
    rows = tuple(int(x) for x in row_sums)
    cols = tuple(int(x) for x in col_sums)
    if sum(rows) != sum(cols):
        return 0
    return _count_tables(rows, cols)


@lru_cache(maxsize=None)
def _count_tables(rows: tuple, cols: tuple) -> int:
    if not rows:
        return 1 if all(c == 0 for c in cols) else 0
    total = 0
    for first in _row_fills(rows[0], cols):
        remaining = tuple(c - f for c, f in zip(cols, first))
        total += _count_tables(rows[1:], remaining)
    return total


def _row_fills(amount: int, caps: tuple) -> Iterator[tuple]:
    """All ways to place `amount` into cells bounded above by caps."""
    if len(caps) == 1:
        if amount <= caps[0]:
            yield (amount,)
        return
    for first in range(min(amount, caps[0]) + 1):
        for rest in _row_fills(amount - first, caps[1:]):
            yield (first,) + rest


def contingency_matrices(row_sums: Sequence[int], col_sums: Sequence[int]) -> Iterator[tuple]:
    """Enumerate the matrices counted by ``contingency_count``."""
    rows = tuple(int(x) for x in row_sums)
    cols = tuple(int(x) for x in col_sums)
    if sum(rows) != sum(cols):
        return
    yield from _enumerate_tables(rows, cols)


def _enumerate_tables(rows: tuple, cols: tuple) -> Iterator[tuple]:
    if not rows:
        if all(c == 0 for c in cols):
            yield ()
        return
    for first in _row_fills(rows[0], cols):
        remaining = tuple(c - f for c, f in zip(cols, first))
        for rest in _enumerate_tables(rows[1:], remaining):
            yield (first,) + rest
