"""
Bruhat order through essential sets, and the Demazure product.

The Demazure product is defined through slipface functions,

    s_{alpha * beta}(a, b) = min over l of s_alpha(a, l) + s_beta(l, b),

so it is computed by a finite minimisation followed by reconstruction.
"""

from __future__ import annotations

__all__ = [
    "EssentialCell", "essential_set", "bruhat_leq", "bruhat_witness",
    "bruhat_leq_pointwise", "demazure_product", "demazure_reflection",
    "slipface_grid", "is_sorted_at",
]

from typing import NamedTuple

import numpy as np

from .affine_perm import (
    AffinePermutation, SlipfaceError, SlipfaceSpec, compose, deviation,
    from_slipface, invert, simple_reflection, slipface,
)


class EssentialCell(NamedTuple):
    a: int
    b: int


def slipface_grid(tau: AffinePermutation, a_values, b_values) -> np.ndarray:
    """Vectorised s_tau(a, b) over the outer product of two integer ranges."""
    k = tau.k
    a = np.asarray(a_values, dtype=np.int64)[:, None, None]
    b = np.asarray(b_values, dtype=np.int64)[None, :, None]
    w = np.asarray(tau.window, dtype=np.int64)[None, None, :]
    r = np.arange(k, dtype=np.int64)[None, None, :]
    hi = np.floor_divide(a - 1 - w, k)
    lo = -np.floor_divide(r - b, k)
    return np.maximum(hi - lo + 1, 0).sum(axis=2)


def essential_set(tau: AffinePermutation) -> set[EssentialCell]:
    """Cells with b in [0, k) satisfying both essential-set inequalities."""
    inv = invert(tau)
    cells = set()
    for b in range(tau.k):
        for a in range(tau(b) + 1, tau(b - 1) + 1):
            if inv(a - 1) >= b > inv(a):
                cells.add(EssentialCell(a, b))
    return cells


def bruhat_witness(alpha: AffinePermutation, beta: AffinePermutation) -> EssentialCell | None:
    """
    Return None if alpha <= beta, else an essential cell of alpha where
    s_alpha exceeds s_beta. Unequal shifts are reported with the cell (0, 0).
    """
    if alpha.k != beta.k:
        raise ValueError(f"mismatched periods {alpha.k} and {beta.k}")
    if alpha.chi != beta.chi:
        return EssentialCell(0, 0)
    for cell in sorted(essential_set(alpha)):
        if slipface(alpha, *cell)[0] > slipface(beta, *cell)[0]:
            return cell
    return None


def bruhat_leq(alpha: AffinePermutation, beta: AffinePermutation) -> bool:
    return bruhat_witness(alpha, beta) is None


def bruhat_leq_pointwise(alpha: AffinePermutation, beta: AffinePermutation) -> bool:
    """Oracle: compare slipface values on a window wider than both deviations."""
    if alpha.k != beta.k:
        raise ValueError(f"mismatched periods {alpha.k} and {beta.k}")
    if alpha.chi != beta.chi:
        return False
    k = alpha.k
    m = 2 * k + deviation(alpha) + deviation(beta)
    bs = range(k)
    a_values = range(-m, k + m)
    return bool(np.all(slipface_grid(alpha, a_values, bs) <= slipface_grid(beta, a_values, bs)))


def demazure_product(alpha: AffinePermutation, beta: AffinePermutation) -> AffinePermutation:
    if alpha.k != beta.k:
        raise ValueError(f"mismatched periods {alpha.k} and {beta.k}")
    k = alpha.k
    spread = deviation(alpha) + deviation(beta) + 2 * k
    for _ in range(4):
        try:
            return from_slipface(_demazure_table(alpha, beta, spread))
        except SlipfaceError:
            spread *= 2
    raise SlipfaceError("could not reconstruct the Demazure product")


def _demazure_table(alpha: AffinePermutation, beta: AffinePermutation, spread: int) -> SlipfaceSpec:
    k = alpha.k
    a_lo, a_hi = -spread, k - 1 + spread
    m = deviation(alpha) + deviation(beta) + k + 1
    a_values = np.arange(a_lo, a_hi + 1)
    l_values = np.arange(a_lo - m, a_hi + m + 1)
    s_alpha = slipface_grid(alpha, a_values, l_values)
    s_beta = slipface_grid(beta, l_values, range(k))
    table = {}
    for b in range(k):
        totals = s_alpha + s_beta[:, b][None, :]
        best = totals.argmin(axis=1)
        if best.min() == 0 or best.max() == len(l_values) - 1:
            raise SlipfaceError("minimum attained on the boundary of the search range")
        column = totals[np.arange(len(a_values)), best]
        for a, v in zip(a_values.tolist(), column.tolist()):
            table[(a, b)] = v
    return SlipfaceSpec(k, alpha.chi + beta.chi, table, a_lo, a_hi)


def is_sorted_at(tau: AffinePermutation, i: int) -> bool:
    """tau(i) < tau(i+1), with tau(k) = tau(0) + k."""
    return tau(i) < tau(i + 1)


def demazure_reflection(tau: AffinePermutation, i: int) -> AffinePermutation:
    """tau * sigma_i in closed form: multiply when sorted at i, absorb otherwise."""
    if not 0 <= i < tau.k:
        raise ValueError(f"reflection index {i} outside [0, {tau.k})")
    if is_sorted_at(tau, i):
        return compose(tau, simple_reflection(tau.k, i))
    return tau
