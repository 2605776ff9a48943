import random
from itertools import islice
from math import comb

import pytest

from oracles import random_core, random_reduced_letters, word_value
from tloci.affine_perm import AffinePermutation, from_window, simple_reflection, slipface
from tloci.degeneration import (
    BULLET, FilledWord, count_strata, degree_distribution, distribution_checks,
    filled_truncations, ramification_schedule, stratum_aspects, strata,
)
from tloci.loci import locus_profile
from tloci.twists import noncolliding
from tloci.words import count_reduced_words, inversion_count, normalize_to_core

SIGMA0 = simple_reflection(2, 0)


def random_instance(rng, max_k=5, max_len=8):
    """A permutation with a random shift together with one of its reduced words."""
    k = rng.randint(2, max_k)
    letters = random_reduced_letters(rng, k, rng.randint(0, max_len))
    core = word_value(k, letters)
    shift = rng.randint(-4, 4)
    tau = AffinePermutation(k, tuple(x - shift for x in core.window))
    assert tau.chi == shift
    return tau, letters


def spread(letters, g, rng):
    slots = sorted(rng.sample(range(g), len(letters)))
    out = [None] * g
    for pos, m in zip(slots, letters):
        out[pos] = m
    return tuple(out)


def test_sigma0_example():
    fw = FilledWord(SIGMA0, 1, (0,))
    assert stratum_aspects(fw, 1) == {1: (1, 0)}
    sched = ramification_schedule(fw, 1)
    assert sched.a == ((0, 0), (2, 0)) and sched.b == ((0, 0),)
    d0 = degree_distribution(fw, 0, 1)
    d1 = degree_distribution(fw, 1, 1)
    assert (d0.d_vec, d0.classes) == ((2,), ("node-pair",))
    assert (d1.d_vec, d1.classes) == ((0,), ("trivial",))


def test_strata_counts():
    assert count_strata(from_window(3, [10, 8, 0]), 8) == 4
    assert len(list(strata(from_window(3, [10, 8, 0]), 8))) == 4
    assert count_strata(from_window(3, [0, 5, 7]), 3) == 1
    shifted = from_window(3, [2, 3, 4])
    assert [fw.letters for fw in strata(shifted, 2)] == [(None, None)]
    assert list(strata(from_window(3, [10, 8, 0]), 7)) == []


def test_strata_enumerate_each_pair_once():
    rng = random.Random(51)
    for _ in range(30):
        tau = random_core(rng, rng.randint(2, 4), 6)
        inv = inversion_count(tau)
        if inv > 6:
            continue
        g = inv + rng.randint(0, 2)
        items = list(strata(tau, g))
        assert len(items) == len(set(items)) == count_strata(tau, g)
        assert len(items) == count_reduced_words(tau) * comb(g, inv)
        assert locus_profile(tau, g).dim == g - inv


def test_serialization_roundtrip():
    tau = from_window(3, [0, 5, 7])
    fw = FilledWord(tau, 5, (2, None, 1, None, 0))
    assert fw.serialize() == f"2 {BULLET} 1 {BULLET} 0"
    assert FilledWord.parse(tau, fw.serialize()) == fw
    assert FilledWord.parse(tau, "2 * 1 . 0") == fw
    assert fw.support == (1, 3, 5)


def test_parse_rejects_wrong_word():
    with pytest.raises(ValueError):
        FilledWord.parse(from_window(3, [0, 5, 7]), "0 1 2")


def test_bullets_repeat_truncations():
    fw = FilledWord(from_window(3, [0, 5, 7]), 4, (2, None, 1, 0))
    t = filled_truncations(fw)
    assert t[1] == t[2] and len(t) == 5


def test_degree_mismatch_and_bullets_are_refused():
    fw = FilledWord(SIGMA0, 1, (0,))
    with pytest.raises(ValueError):
        ramification_schedule(fw, 2)
    with pytest.raises(ValueError):
        degree_distribution(FilledWord(SIGMA0, 2, (0, None)), 0, 2)


def test_aspects_sum_to_degree():
    rng = random.Random(52)
    for _ in range(50):
        tau, letters = random_instance(rng)
        g = len(letters) + rng.randint(0, 3)
        fw = FilledWord(tau, g, spread(letters, g, rng))
        d = tau.chi + g
        aspects = stratum_aspects(fw, d)
        assert set(aspects) == set(fw.support)
        assert all(x + y == d for x, y in aspects.values())


def test_schedules_on_random_strata():
    rng = random.Random(53)
    for _ in range(150):
        tau, letters = random_instance(rng)
        g = len(letters) + rng.randint(0, 3)
        fw = FilledWord(tau, g, spread(letters, g, rng))
        sched = ramification_schedule(fw, tau.chi + g)
        for i in range(1, g + 1):
            assert noncolliding(tau, sched.a[i - 1])
        assert len(sched.a) == g + 1 and len(sched.b) == g


def test_distributions_on_random_words():
    rng = random.Random(54)
    for _ in range(150):
        tau, letters = random_instance(rng)
        g = len(letters)
        fw = FilledWord(tau, g, letters)
        d = tau.chi + g
        for j in range(tau.k):
            distribution_checks(fw, j, d)
            dist = degree_distribution(fw, j, d)
            assert dist.d_vec.count(0) == slipface(tau, tau(j) + 1, j)[1]


def test_all_strata_of_worked_example():
    tau = from_window(3, [10, 8, 0])
    for g in (8, 9, 11):
        for fw in islice(strata(tau, g), 200):
            ramification_schedule(fw, tau.chi + g)
