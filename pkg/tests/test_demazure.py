import random

import pytest

from oracles import brute_leq, column_counter, random_perm, scan_bound
from tloci.affine_perm import compose, from_window, identity, invert, simple_reflection, slipface
from tloci.demazure import (
    EssentialCell, bruhat_leq, bruhat_leq_pointwise, bruhat_witness, demazure_product,
    demazure_reflection, essential_set, is_sorted_at,
)
from tloci.words import k_inversions


def brute_demazure_column(alpha, beta):
    """Scan l over a range much wider than either deviation."""
    reach = 3 * scan_bound(alpha, beta)
    sa, sb = column_counter(alpha, 4 * reach), column_counter(beta, 4 * reach)
    return lambda a, b: min(sa(a, l) + sb(l, b) for l in range(-reach, reach))


def test_essential_set_examples():
    assert essential_set(identity(3)) == set()
    assert essential_set(simple_reflection(2, 0)) == {EssentialCell(1, 1)}


def test_essential_cells_of_sorted_windows_sit_at_b_zero():
    rng = random.Random(5)
    for _ in range(100):
        tau = random_perm(rng, rng.randint(2, 5), 20)
        tau = from_window(tau.k, sorted(tau.window))
        assert all(cell.b == 0 for cell in essential_set(tau))


def test_essential_cells_satisfy_both_inequalities():
    rng = random.Random(6)
    for _ in range(100):
        tau = random_perm(rng, rng.randint(2, 5), 20)
        inv = invert(tau)
        for a, b in essential_set(tau):
            assert inv(a - 1) >= b > inv(a)
            assert tau(b - 1) >= a > tau(b)


def test_bruhat_examples():
    tau = from_window(3, [0, 8, 10])
    assert bruhat_leq(tau, tau)
    assert bruhat_leq(tau, from_window(3, [8, 0, 10]))
    assert bruhat_leq(identity(3), simple_reflection(3, 0))
    assert not bruhat_leq(from_window(3, [8, 0, 10]), tau)


def test_shift_mismatch_is_incomparable():
    assert not bruhat_leq(identity(3), from_window(3, [1, 2, 3]))
    assert bruhat_witness(identity(3), from_window(3, [1, 2, 3])) == EssentialCell(0, 0)


def test_witness_is_a_failing_essential_cell():
    alpha, beta = from_window(3, [8, 0, 10]), from_window(3, [0, 8, 10])
    cell = bruhat_witness(alpha, beta)
    assert cell in essential_set(alpha)
    assert slipface(alpha, *cell)[0] > slipface(beta, *cell)[0]


def test_mismatched_periods_raise():
    with pytest.raises(ValueError):
        bruhat_leq(identity(2), identity(3))
    with pytest.raises(ValueError):
        demazure_product(identity(2), identity(3))


def test_essential_set_comparison_matches_scanning_oracle():
    rng = random.Random(11)
    for _ in range(200):
        k = rng.randint(1, 5)
        alpha = random_perm(rng, k, 12)
        beta = random_perm(rng, k, 12)
        beta = from_window(k, [x + beta.chi - alpha.chi for x in beta.window])
        assert bruhat_leq(alpha, beta) == brute_leq(alpha, beta) == bruhat_leq_pointwise(alpha, beta)


def test_demazure_examples():
    tau = from_window(3, [0, 5, 7])
    s0 = simple_reflection(3, 0)
    assert demazure_product(identity(3), tau) == tau
    assert demazure_product(s0, s0) == s0
    assert demazure_product(tau, s0).window == (5, 0, 7)
    assert demazure_reflection(tau, 0).window == (5, 0, 7)
    assert demazure_reflection(from_window(3, [5, 0, 7]), 0).window == (5, 0, 7)


def test_demazure_product_matches_min_formula():
    rng = random.Random(12)
    for _ in range(60):
        k = rng.randint(1, 5)
        alpha, beta = random_perm(rng, k, 8), random_perm(rng, k, 8)
        gamma = demazure_product(alpha, beta)
        brute = brute_demazure_column(alpha, beta)
        for b in range(k):
            for a in range(min(gamma.window) - k, max(gamma.window) + k):
                assert slipface(gamma, a, b)[0] == brute(a, b)


def test_reflection_closed_form_matches_general_product():
    rng = random.Random(13)
    for _ in range(200):
        k = rng.randint(2, 6)
        tau = random_perm(rng, k, 20)
        i = rng.randrange(k)
        result = demazure_reflection(tau, i)
        assert result == demazure_product(tau, simple_reflection(k, i))
        assert bruhat_leq(tau, result)
        assert (result == tau) == (not is_sorted_at(tau, i))


def test_reflection_bumps_the_displayed_cells():
    rng = random.Random(14)
    for _ in range(100):
        k = rng.randint(2, 5)
        tau = random_perm(rng, k, 15)
        i = rng.randrange(k)
        if not is_sorted_at(tau, i):
            continue
        result = demazure_reflection(tau, i)
        for b in range(-k, 2 * k):
            for a in range(min(tau.window) - 2 * k, max(tau.window) + 2 * k):
                bump = (b - i - 1) % k == 0 and tau(b - 1) < a <= tau(b)
                assert slipface(result, a, b)[0] == slipface(tau, a, b)[0] + int(bump)


def test_disjoint_inversions_give_ordinary_product():
    rng = random.Random(15)
    checked = 0
    for _ in range(300):
        k = rng.randint(2, 4)
        alpha, beta = random_perm(rng, k, 8), random_perm(rng, k, 8)
        a_classes = {(a % k, (b - a)) for a, b in k_inversions(alpha)[1]}
        b_classes = {(a % k, (b - a)) for a, b in k_inversions(invert(beta))[1]}
        if a_classes & b_classes:
            continue
        checked += 1
        assert demazure_product(alpha, beta) == compose(alpha, beta)
    assert checked > 20


def test_invalid_reflection_index():
    with pytest.raises(ValueError):
        demazure_reflection(identity(3), 3)
