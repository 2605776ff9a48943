"""
Acceptance suite: one test (sometimes two) per numbered criterion.

Each check runs inside ``criterion(...)``, which times it against the
criterion's budget and records the outcome for the terminal summary. Two
literal readings are known not to hold. Those are strict xfails, with the
reasoning in the project notes.
"""

import random
from itertools import permutations

import pytest

from acceptance_log import best_of, criterion
from oracles import (
    bounded_covers, brute_h, brute_leq, brute_shift, column_counter, random_perm,
    random_reduced_letters, scan_bound, word_value,
)
from tloci.affine_perm import (
    AffinePermutation, deviation, from_slipface, from_window, invert, simple_reflection,
    slipface, slipface_table,
)
from tloci.degeneration import FilledWord, distribution_checks, degree_distribution, ramification_schedule
from tloci.demazure import bruhat_leq, demazure_product, demazure_reflection
from tloci.hurwitz import (
    Move, MonodromyTuple, classify, count_orbits, invariant_d, product_condition_tuples,
    replay, standardize,
)
from tloci.loci import check_cover_equalities, codim1_covers, shuffle_poset, splitting_codim, splitting_type
from tloci.twists import (
    essential_twists, h1_equal, inversion_identity, new_section_budget, new_section_budget_rhs,
    noncolliding,
)
from tloci.words import (
    ReducedWord, count_reduced_words, index_property_failures, inversion_count, k_inversions,
    reduced_words, truncation_profile,
)

SWAP_ARROWS = {
    ((8, 0, 10), (0, 8, 10)), ((0, 10, 8), (0, 8, 10)),
    ((8, 10, 0), (8, 0, 10)), ((10, 0, 8), (0, 10, 8)),
    ((10, 8, 0), (8, 10, 0)), ((10, 8, 0), (10, 0, 8)),
}
POSET_DIMS = {(0, 8, 10): 3, (8, 0, 10): 2, (0, 10, 8): 2, (8, 10, 0): 1, (10, 0, 8): 1, (10, 8, 0): 0}
SORTED_SIX = [(0, 8, 10), (-2, 8, 12), (-2, 9, 11), (-1, 7, 12), (-1, 9, 10), (0, 7, 11)]


def sigma0(k):
    return sum(1 for d in range(1, k + 1) if k % d == 0)


def normalized(pairs, k):
    """Translate each pair by a multiple of k so its first entry lies in [0, k)."""
    return {(a - k * (a // k), b - k * (a // k)) for a, b in pairs}


def brute_min_formula(alpha, beta, a, b):
    """min over l of s_alpha(a, l) + s_beta(l, b), by counting over a wide range of l."""
    reach = 2 * scan_bound(alpha, beta) + abs(a) + abs(b)
    far = 3 * reach
    suffix = sum(1 for n in range(reach, far) if alpha(n) < a)
    s_alpha = {}
    for l in range(reach - 1, -reach - 1, -1):
        suffix += alpha(l) < a
        s_alpha[l] = suffix
    s_beta = column_counter(beta, far)
    return min(s_alpha[l] + s_beta(l, b) for l in range(-reach, reach))


def random_word_instance(rng, max_k=5, max_len=8):
    k = rng.randint(2, max_k)
    letters = random_reduced_letters(rng, k, rng.randint(0, max_len))
    shift = rng.randint(-4, 4)
    tau = AffinePermutation(k, tuple(x - shift for x in word_value(k, letters).window))
    return tau, letters


def test_criterion_01_inversions_of_worked_example():
    tau = from_window(3, [0, 8, 10])
    with criterion(1, "k-inversions of (0,8,10)", "values", 0.001):
        count, reps = k_inversions(tau)
        assert count == 5 == inversion_count(tau)
        assert normalized(reps, 3) == {(1, 3), (1, 6), (2, 3), (2, 6), (2, 9)}
    with criterion(1, "k-inversions of (0,8,10)", "timing", 0.001):
        assert best_of(lambda: k_inversions(tau)) < 0.001


def test_criterion_02_reduced_word_counts():
    with criterion(2, "reduced-word counts of (5,3,-5) and (-3,2,4)", "values", 0.01):
        assert count_reduced_words(from_window(3, [5, 3, -5])) == 4
        assert len(list(reduced_words(from_window(3, [5, 3, -5])))) == 4
        words = list(reduced_words(from_window(3, [-3, 2, 4])))
        assert len(words) == 1 and words[0].display() == "s0 s1 s2"
    with criterion(2, "reduced-word counts of (5,3,-5) and (-3,2,4)", "timing", 0.001):
        assert best_of(lambda: count_reduced_words(from_window(3, [5, 3, -5]))) < 0.001
        assert best_of(lambda: list(reduced_words(from_window(3, [-3, 2, 4])))) < 0.001


def test_criterion_03_shuffle_poset():
    with criterion(3, "shuffle poset of (0,8,10) at g=8", "six nodes, dims and swap arrows", 0.01):
        poset = shuffle_poset(from_window(3, [0, 8, 10]), 8)
        dims = {n.window: d for n, d in zip(poset.nodes, poset.dims)}
        assert dims == POSET_DIMS
        assert sorted(dims.values()) == [0, 1, 1, 2, 2, 3]
        assert poset.edge_windows("swap") == SWAP_ARROWS
        # every swap arrow is a genuine cover relation
        assert SWAP_ARROWS <= poset.edge_windows("hasse")


@pytest.mark.xfail(strict=True, reason="the poset has six swap arrows and eight covers, not five edges")
def test_criterion_03_literal_five_edges():
    gap = "six swap arrows and eight covers; no edge set of size five"
    with criterion(3, "shuffle poset of (0,8,10) at g=8", "exactly five edges", 0.01, known_gap=gap):
        poset = shuffle_poset(from_window(3, [0, 8, 10]), 8)
        assert len(poset.edge_windows("swap")) == 5 or len(poset.edge_windows("hasse")) == 5


def test_criterion_04_splitting_types():
    with criterion(4, "splitting types of the trigonal examples", "values", 0.01):
        assert splitting_type(from_window(3, [0, 5, 7])).e == (-3, -2, 0)
        shuffles = {p for w in SORTED_SIX for p in permutations(w)}
        assert len(shuffles) == 36
        for window in shuffles:
            assert splitting_type(from_window(3, window)).e == (-4, -3, 0)


def test_criterion_05_splitting_codimension():
    with criterion(5, "codimension of splitting type (-4,-3,0)", "value", 0.01):
        assert splitting_codim((-4, -3, 0)) == 5 == inversion_count(from_window(3, [0, 8, 10]))


def test_criterion_06_identity_suite():
    rng = random.Random(6006)
    with criterion(6, "identity suite on 1000 random permutations", "all identities", 30):
        done = 0
        while done < 1000:
            tau = random_perm(rng, rng.randint(1, 6), 30)
            if deviation(tau) > 30:
                continue
            done += 1
            k = tau.k
            inv = inversion_count(tau)
            assert inversion_identity(tau) == (inv, inv)
            for j in range(k):
                left, right = h1_equal(tau, j)
                assert left == right
                assert new_section_budget(tau, j) == new_section_budget_rhs(tau, j)
            assert tau.chi == brute_shift(tau)
            for _ in range(3):
                a, b = rng.randint(-40, 40), rng.randint(-8, 8)
                s, h = slipface(tau, a, b)
                assert h == s - (a - b + tau.chi) == brute_h(tau, a, b)
                assert slipface(invert(tau), b, a)[0] == h
            assert from_slipface(slipface_table(tau)) == tau


def test_criterion_07_demazure_suite():
    rng = random.Random(7007)
    with criterion(7, "Demazure and Bruhat suite on 500 random cases", "all comparisons", 30):
        for _ in range(500):
            k = rng.randint(2, 5)
            tau = random_perm(rng, k, 12)
            i = rng.randrange(k)
            closed = demazure_reflection(tau, i)
            assert closed == demazure_product(tau, simple_reflection(k, i))
            # the min formula, evaluated independently on a few cells
            for _ in range(3):
                a, b = rng.randint(-25, 25), rng.randrange(k)
                assert slipface(closed, a, b)[0] == brute_min_formula(tau, simple_reflection(k, i), a, b)
            beta = random_perm(rng, k, 12)
            beta = from_window(k, [x + beta.chi - tau.chi for x in beta.window])
            assert bruhat_leq(tau, beta) == brute_leq(tau, beta)
            assert bruhat_leq(tau, closed) and brute_leq(tau, closed)


def _random_words(seed, n=500):
    rng = random.Random(seed)
    for _ in range(n):
        k = rng.randint(2, 5)
        yield ReducedWord(k, random_reduced_letters(rng, k, rng.randint(0, 10)))


def test_criterion_08_truncation_suite():
    with criterion(8, "truncation index properties on 500 random words", "congruence, adjacency forces order, gap monotone", 30):
        for word in _random_words(8008):
            profile = truncation_profile(word, check=False)
            bad = [f for f in index_property_failures(profile) if f[0] != "order_implies_adjacent"]
            assert bad == []


@pytest.mark.xfail(strict=True, reason="j+ < j- does not force adjacent values")
def test_criterion_08_literal_biconditional():
    gap = "j+ < j- without adjacent values, e.g. word 0 1 0 2 1 0 2 1 of (5,3,-5) at step 4"
    with criterion(8, "truncation index properties on 500 random words", "order forces adjacency", 30,
                   known_gap=gap):
        for word in _random_words(8008):
            assert index_property_failures(truncation_profile(word, check=False)) == []


def test_criterion_09_degeneration_suite():
    rng = random.Random(9009)
    with criterion(9, "schedules and degree distributions on 200 random strata", "all checks", 60):
        for _ in range(200):
            tau, letters = random_word_instance(rng)
            inv = len(letters)
            assert inversion_count(tau) == inv
            g = inv + rng.randint(0, 3)
            slots = sorted(rng.sample(range(g), inv))
            filled = [None] * g
            for pos, m in zip(slots, letters):
                filled[pos] = m
            fw = FilledWord(tau, g, tuple(filled))
            d = tau.chi + g
            sched = ramification_schedule(fw, d)
            assert all(x >= 0 for row in sched.a + sched.b for x in row)
            e = essential_twists(tau).e
            for i in range(1, g + 1):
                for j in range(tau.k):
                    assert sched.a[i][j] + sched.b[i - 1][j] == d + tau(j) + e[j]
                assert noncolliding(tau, sched.a[i - 1])
            plain = FilledWord(tau, inv, letters)
            for j in range(tau.k):
                distribution_checks(plain, j, tau.chi + inv)
                dist = degree_distribution(plain, j, tau.chi + inv)
                trivial = sum(1 for x in dist.d_vec if x == 0)
                assert trivial == slipface(tau, tau(j) + 1, j)[1] == brute_h(tau, tau(j) + 1, j)


@pytest.mark.parametrize("k, g", [(2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (4, 2)])
def test_criterion_10_orbit_counts(k, g):
    with criterion(10, "Hurwitz orbit counts equal sigma0(k) - 1", f"k={k}, g={g}", 60):
        orbits = count_orbits(k, g)
        assert len(orbits) == sigma0(k) - 1
        labels = sorted({invariant_d(MonodromyTuple(k, o[0])) for o in orbits})
        assert labels == [d for d in range(1, k) if k % d == 0]


def _random_move(rng, r):
    kind = rng.choice(["E1", "E2", "E3"] if r >= 2 else ["E1"])
    index = 0 if kind == "E1" else rng.randint(1, r - 1)
    return Move(kind, index, rng.random() < 0.5)


def test_criterion_11_hurwitz_consistency():
    rng = random.Random(1111)
    title = "classify, invariant and standard form agree"
    with criterion(11, title, "exhaustive k <= 6, g <= 2 and random moves", 120):
        pool = []
        for k in range(2, 7):
            for g in (1, 2):
                for t in product_condition_tuples(k, g):
                    d = invariant_d(t)
                    std, witness = standardize(t)
                    assert classify(t) == d
                    assert set(std.transpositions) == {(0, d)}
                    assert replay(t, witness) == std
                    pool.append(t)
        assert pool
        for _ in range(10_000):
            t = rng.choice(pool)
            d = invariant_d(t)
            for _ in range(rng.randint(1, 12)):
                t = replay(t, [_random_move(rng, t.r)])
            assert invariant_d(t) == d


def test_criterion_12_cover_suite():
    rng = random.Random(1212)
    with criterion(12, "codimension-one covers on 100 random permutations", "equalities and oracle", 120):
        for _ in range(100):
            tau = random_perm(rng, rng.randint(2, 4), 12)
            covers = codim1_covers(tau)
            for c in covers:
                check_cover_equalities(tau, c)
            assert {c.tau_prime.window for c in covers} == bounded_covers(tau, 12)
