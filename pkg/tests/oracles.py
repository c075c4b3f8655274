"""Independent brute-force oracles shared by the unit and acceptance tests.

Everything here recomputes quantities from definitions (orbits, subword
closures, literal sums) without going through the library's formulas, so a
bug in the implementation cannot hide in its own test."""

import itertools


def all_compositions(n):
    """Every composition of n, via its set of cut points."""
    out = []
    for cuts in itertools.product([0, 1], repeat=n - 1):
        bounds = [0] + [i + 1 for i, c in enumerate(cuts) if c] + [n]
        out.append(tuple(b - a for a, b in zip(bounds, bounds[1:])))
    return out


def brute_pairwise_sum(parts, degs):
    """Literal expansion of sum_{j>i} (h_i d_j - h_j d_i)."""
    return sum(
        parts[i] * degs[j] - parts[j] * degs[i]
        for j in range(len(parts))
        for i in range(j)
    )


def orbit_of_double_coset(w, left, right):
    """BFS closure of {w} under left/right multiplication by block
    transpositions: the literal double coset as a set of one-lines."""
    gens_left = sorted(left.internal_reflections())
    gens_right = sorted(right.internal_reflections())
    seen = {w.one_line}
    frontier = [w.one_line]
    while frontier:
        nxt = []
        for line in frontier:
            for i in gens_left:  # swap values i, i+1
                moved = tuple(
                    i + 1 if v == i else i if v == i + 1 else v for v in line
                )
                if moved not in seen:
                    seen.add(moved)
                    nxt.append(moved)
            for i in gens_right:  # swap positions i, i+1
                moved = list(line)
                moved[i - 1], moved[i] = moved[i], moved[i - 1]
                moved = tuple(moved)
                if moved not in seen:
                    seen.add(moved)
                    nxt.append(moved)
        frontier = nxt
    return seen


def subword_closure(word, n):
    """All products of subwords of `word` (the definitional Bruhat down-set
    when the word is reduced)."""
    out = {tuple(range(1, n + 1))}
    for a in word:
        extra = set()
        for line in out:
            moved = list(line)
            moved[a - 1], moved[a] = moved[a], moved[a - 1]
            extra.add(tuple(moved))
        out |= extra
    return out


def all_reduced_words(line):
    """Every reduced word of the permutation, by stripping right descents."""
    line = tuple(line)
    n = len(line)
    if all(line[i] == i + 1 for i in range(n)):
        return [()]
    words = []
    for i in range(n - 1):
        if line[i] > line[i + 1]:
            shorter = list(line)
            shorter[i], shorter[i + 1] = shorter[i + 1], shorter[i]
            for w in all_reduced_words(tuple(shorter)):
                words.append(w + (i + 1,))
    return words


def enumerate_bundles(pool, max_rank):
    """All bundles (as summand-pair tuples) with slopes drawn from `pool`
    and total rank <= max_rank; includes the zero bundle."""
    out = []

    def rec(idx, remaining, acc):
        out.append(tuple(acc))
        for i in range(idx, len(pool)):
            if pool[i].denominator <= remaining:
                acc.append((pool[i], 1))
                rec(i, remaining - pool[i].denominator, acc)
                acc.pop()

    rec(0, max_rank, [])
    return out
