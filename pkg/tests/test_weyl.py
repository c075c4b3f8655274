"""Coxeter combinatorics checked against definitional brute force."""

import itertools
import math
import random

import pytest

from ffcalc import (
    Composition,
    WeylElement,
    YoungSubgroup,
    bruhat_leq,
    contingency_count,
    coset_rep_from_matrix,
    double_coset_size,
    is_minimal_rep,
    length,
    matrix_from_rep,
    min_double_coset_reps,
    reduced_word,
)
from ffcalc.weyl import MAX_ENUM_N, contingency_matrices
from oracles import (
    all_compositions,
    all_reduced_words,
    orbit_of_double_coset,
    subword_closure,
)


def young(*parts):
    return YoungSubgroup(Composition(tuple(parts)))


class TestWeylElement:
    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            WeylElement((1, 1, 2))
        with pytest.raises(ValueError):
            WeylElement(())

    def test_compose_and_invert(self):
        w = WeylElement((2, 3, 1))
        assert (w * w.inverse()).one_line == (1, 2, 3)
        assert w.inverse().one_line == (3, 1, 2)


class TestLength:
    def test_identity(self):
        assert length((1, 2, 3)) == 0

    def test_longest_element(self):
        assert length((3, 2, 1)) == 3

    def test_two_inversions(self):
        assert length((2, 1, 4, 3)) == 2

    def test_matches_reduced_word(self):
        for line in itertools.permutations(range(1, 6)):
            word = reduced_word(line)
            assert len(word) == length(line)
            # the word really multiplies out to the permutation
            acc = WeylElement.identity(5)
            for a in word:
                s = list(range(1, 6))
                s[a - 1], s[a] = s[a], s[a - 1]
                acc = acc * WeylElement(tuple(s))
            assert acc.one_line == line


class TestMinimalRep:
    def test_identity_is_always_minimal(self):
        assert is_minimal_rep((1, 2), young(1, 1), young(1, 1))

    def test_simple_reflection_inside_subgroup(self):
        assert not is_minimal_rep((2, 1), young(2), young(2))

    def test_interleaving_rep(self):
        assert is_minimal_rep((1, 3, 2, 4), young(2, 2), young(2, 2))

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            is_minimal_rep((1, 2, 3), young(2), young(2, 1))

    def test_descent_criterion_matches_brute_force(self):
        # definitional check: w is minimal iff nothing in its double coset
        # is shorter
        for n in (2, 3, 4):
            comps = all_compositions(n)
            for lc, rc in itertools.product(comps, comps):
                left, right = young(*lc), young(*rc)
                for line in itertools.permutations(range(1, n + 1)):
                    w = WeylElement(line)
                    orbit = orbit_of_double_coset(w, left, right)
                    brute = length(line) == min(length(o) for o in orbit)
                    assert is_minimal_rep(w, left, right) == brute

    def test_brute_force_spot_check_n5(self):
        rng = random.Random("minrep5")
        comps = all_compositions(5)
        for _ in range(25):
            left, right = young(*rng.choice(comps)), young(*rng.choice(comps))
            line = tuple(rng.sample(range(1, 6), 5))
            w = WeylElement(line)
            orbit = orbit_of_double_coset(w, left, right)
            brute = length(line) == min(length(o) for o in orbit)
            assert is_minimal_rep(w, left, right) == brute


class TestMinDoubleCosetReps:
    def test_s2_trivial_subgroups(self):
        reps = min_double_coset_reps(2, young(1, 1), young(1, 1))
        assert [w.one_line for w in reps] == [(1, 2), (2, 1)]

    def test_s2_full_left_subgroup(self):
        reps = min_double_coset_reps(2, young(2), young(1, 1))
        assert [w.one_line for w in reps] == [(1, 2)]

    def test_s3_two_cosets(self):
        reps = min_double_coset_reps(3, young(2, 1), young(2, 1))
        assert [w.one_line for w in reps] == [(1, 2, 3), (1, 3, 2)]

    def test_enumeration_cap(self):
        with pytest.raises(ValueError):
            min_double_coset_reps(MAX_ENUM_N + 1, young(MAX_ENUM_N + 1), young(MAX_ENUM_N + 1))

    def test_counts_and_partition(self):
        for n in (2, 3, 4, 5):
            comps = all_compositions(n)
            for lc, rc in itertools.product(comps, comps):
                left, right = young(*lc), young(*rc)
                reps = min_double_coset_reps(n, left, right)
                assert len(reps) == contingency_count(lc, rc)
                orbits = [orbit_of_double_coset(w, left, right) for w in reps]
                # pairwise disjoint and covering
                assert sum(len(o) for o in orbits) == math.factorial(n)
                assert len(set().union(*orbits)) == math.factorial(n)


class TestCosetSize:
    def test_formula_matches_orbits(self):
        for n in (2, 3, 4):
            comps = all_compositions(n)
            for lc, rc in itertools.product(comps, comps):
                left, right = young(*lc), young(*rc)
                for w in min_double_coset_reps(n, left, right):
                    assert double_coset_size(w, left, right) == len(
                        orbit_of_double_coset(w, left, right)
                    )

    def test_formula_matches_orbits_n5_sampled(self):
        rng = random.Random("size5")
        comps = all_compositions(5)
        for _ in range(10):
            left, right = young(*rng.choice(comps)), young(*rng.choice(comps))
            w = WeylElement(tuple(rng.sample(range(1, 6), 5)))
            assert double_coset_size(w, left, right) == len(
                orbit_of_double_coset(w, left, right)
            )


class TestBruhat:
    def test_identity_below_everything(self):
        for line in itertools.permutations(range(1, 5)):
            assert bruhat_leq((1, 2, 3, 4), line)

    def test_literal_subword(self):
        assert bruhat_leq((2, 1, 3), (2, 3, 1))  # s1 <= s1 s2

    def test_incomparable_pair(self):
        assert not bruhat_leq((2, 3, 1), (3, 1, 2))
        assert not bruhat_leq((3, 1, 2), (2, 3, 1))

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            bruhat_leq((1, 2), (1, 2, 3))

    def test_matches_subword_closure(self):
        for n in (2, 3, 4):
            perms = list(itertools.permutations(range(1, n + 1)))
            for wline in perms:
                down = subword_closure(reduced_word(wline), n)
                for uline in perms:
                    assert bruhat_leq(uline, wline) == (uline in down)

    def test_word_independence_small(self):
        for n in (3, 4):
            for wline in itertools.permutations(range(1, n + 1)):
                closures = {
                    frozenset(subword_closure(word, n))
                    for word in all_reduced_words(wline)
                }
                assert len(closures) == 1


class TestMatrixCorrespondence:
    def test_identity_matrix(self):
        assert coset_rep_from_matrix(((1, 0), (0, 1))).one_line == (1, 2)

    def test_antidiagonal(self):
        assert coset_rep_from_matrix(((0, 1), (1, 0))).one_line == (2, 1)

    def test_s3_nontrivial(self):
        assert coset_rep_from_matrix(((1, 1), (1, 0))).one_line == (1, 3, 2)

    def test_matrix_of_identity(self):
        assert matrix_from_rep((1, 2), young(1, 1), young(1, 1)) == ((1, 0), (0, 1))

    def test_matrix_of_transposition(self):
        assert matrix_from_rep((2, 1), young(1, 1), young(1, 1)) == ((0, 1), (1, 0))

    def test_rejects_bad_matrices(self):
        with pytest.raises(ValueError):
            coset_rep_from_matrix(((1, -1), (0, 1)))
        with pytest.raises(ValueError):
            coset_rep_from_matrix(((0, 0), (0, 1)))  # zero row sum

    def test_round_trip_n_le_5(self):
        for n in (2, 3, 4, 5):
            comps = all_compositions(n)
            for lc, rc in itertools.product(comps, comps):
                left, right = young(*lc), young(*rc)
                for h in contingency_matrices(lc, rc):
                    w = coset_rep_from_matrix(h)
                    assert is_minimal_rep(w, left, right)
                    assert matrix_from_rep(w, left, right) == h

    def test_constant_on_double_cosets(self):
        rng = random.Random("const")
        for n in (4, 5, 6):
            comps = all_compositions(n)
            for _ in range(5):
                lc, rc = rng.choice(comps), rng.choice(comps)
                left, right = young(*lc), young(*rc)
                left_els = list(left.elements())
                right_els = list(right.elements())
                for w in min_double_coset_reps(n, left, right)[:10]:
                    h = matrix_from_rep(w, left, right)
                    for _ in range(20):
                        u = rng.choice(left_els) * w * rng.choice(right_els)
                        assert matrix_from_rep(u, left, right) == h


class TestContingencyCount:
    def test_known_small_values(self):
        assert contingency_count((2, 1), (2, 1)) == 2
        assert contingency_count((1, 1), (1, 1)) == 2
        assert contingency_count((2,), (1, 1)) == 1

    def test_mismatched_totals(self):
        assert contingency_count((2,), (3,)) == 0

    def test_count_matches_enumeration(self):
        for n in (3, 4, 5, 6):
            comps = all_compositions(n)
            rng = random.Random(f"count{n}")
            for _ in range(10):
                lc, rc = rng.choice(comps), rng.choice(comps)
                assert contingency_count(lc, rc) == sum(
                    1 for _ in contingency_matrices(lc, rc)
                )
