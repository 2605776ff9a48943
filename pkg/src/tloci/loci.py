"""
Combinatorial queries on transmission loci: membership, dimension and
point counts, codimension-one covers, splitting types and shuffle posets.
"""

from __future__ import annotations

__all__ = [
    "LocusProfile", "SplittingType", "CoverDatum", "ShufflePoset",
    "in_locus", "locus_profile", "shuffle_poset", "codim1_covers",
    "check_cover_equalities", "has_narrow_shape", "splitting_type", "splitting_codim",
]

from dataclasses import dataclass
from itertools import permutations

from .affine_perm import AffinePermutation, deviation, slipface
from .demazure import bruhat_leq
from .words import count_reduced_words, inversion_count, normalize_to_core


def in_locus(tau: AffinePermutation, lam: AffinePermutation) -> bool:
    """True iff the locus of lam sits inside the locus of tau."""
    if tau.k != lam.k:
        raise ValueError(f"mismatched periods {tau.k} and {lam.k}")
    return tau.chi == lam.chi and bruhat_leq(tau, lam)


@dataclass(frozen=True)
class LocusProfile:
    tau: AffinePermutation
    g: int
    d: int
    inv: int
    nonempty: bool
    dim: int | None
    points: int | None

    def to_json(self) -> dict:
        return {
            "tau": self.tau.to_json(), "g": self.g, "d": self.d, "inv": self.inv,
            "nonempty": self.nonempty, "dim": self.dim, "points": self.points,
        }


def locus_profile(tau: AffinePermutation, g: int) -> LocusProfile:
    if g < 0:
        raise ValueError("genus must be non-negative")
    inv = inversion_count(tau)
    nonempty = g >= inv
    dim = g - inv if nonempty else None
    points = count_reduced_words(normalize_to_core(tau)) if dim == 0 else None
    return LocusProfile(tau, g, tau.chi + g, inv, nonempty, dim, points)


@dataclass(frozen=True)
class ShufflePoset:
    nodes: tuple[AffinePermutation, ...]      # lexicographic by window
    dims: tuple[int, ...]
    # (larger, smaller) index pairs; the locus of the larger sits inside the other
    hasse_edges: tuple[tuple[int, int], ...]
    # the hasse edges whose endpoints differ by swapping two adjacent window slots
    swap_edges: tuple[tuple[int, int], ...]

    def edge_windows(self, kind: str = "swap") -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
        edges = self.swap_edges if kind == "swap" else self.hasse_edges
        return {(self.nodes[s].window, self.nodes[t].window) for s, t in edges}


def shuffle_poset(tau_sorted: AffinePermutation, g: int) -> ShufflePoset:
    """All rearrangements of a sorted window with the Hasse diagram of Bruhat order."""
    w = tau_sorted.window
    if list(w) != sorted(w):
        raise ValueError(f"window {list(w)} is not sorted")
    k = tau_sorted.k
    nodes = tuple(AffinePermutation(k, p) for p in sorted(set(permutations(w))))
    invs = [inversion_count(x) for x in nodes]
    n = len(nodes)
    less = [[i != j and bruhat_leq(nodes[i], nodes[j]) for j in range(n)] for i in range(n)]
    edges = []
    for hi in range(n):
        for lo in range(n):
            if not less[lo][hi]:
                continue
            if any(less[lo][m] and less[m][hi] for m in range(n)):
                continue
            edges.append((hi, lo))
    edges.sort()
    swaps = [(hi, lo) for hi, lo in edges if _adjacent_swap(nodes[hi].window, nodes[lo].window)]
    return ShufflePoset(nodes, tuple(g - i for i in invs), tuple(edges), tuple(swaps))


def _adjacent_swap(u: tuple[int, ...], v: tuple[int, ...]) -> bool:
    diff = [j for j in range(len(u)) if u[j] != v[j]]
    return len(diff) == 2 and diff[1] == diff[0] + 1


@dataclass(frozen=True)
class CoverDatum:
    tau_prime: AffinePermutation
    j_minus: int
    j_plus: int
    delta: int


def check_cover_equalities(tau: AffinePermutation, cover: CoverDatum) -> None:
    """Verify the three slipface equalities attached to a codimension-one cover."""
    tp = cover.tau_prime
    jm, jp = cover.j_minus, cover.j_plus
    for j in range(tau.k):
        a = tau(j) + 1
        if slipface(tau, a, j)[0] != slipface(tp, a, j)[0]:
            raise AssertionError(f"constant equality fails at j={j}")
        if jm < jp and j != jp:
            if slipface(tp, a, j)[0] != slipface(tp, a, j + 1)[0] + 1:
                raise AssertionError(f"increase equality fails at j={j}")
        if jm > jp and j != jm:
            if slipface(tp, a, j)[0] != slipface(tp, a - 1, j)[0] + 1:
                raise AssertionError(f"increase equality fails at j={j}")
    a = tp(jp) + 1
    if slipface(tau, a, jp)[0] != slipface(tp, a, jp)[0]:
        raise AssertionError("second constant equality fails")


def codim1_covers(tau: AffinePermutation) -> list[CoverDatum]:
    """
    All tau' above tau in Bruhat order with one more inversion class.

    A cover is tau o t for an affine reflection t, so its window differs from
    tau at two indices: tau'(j_+) = tau(j_+) + delta and tau'(j_-) = tau(j_-) - delta
    with delta > 0 and delta = tau(j_-) - tau(j_+) mod k. Since the length of
    t is at most 2 inv(tau) + 1, delta is at most |tau(j_-) - tau(j_+)| + k(2 inv + 3).
    Every delta in that range is tried and kept when the inversion count goes
    up by exactly one.
    """
    k = tau.k
    inv = inversion_count(tau)
    w = tau.window
    found = []
    for jm in range(k):
        for jp in range(k):
            if jm == jp:
                continue
            first = (w[jm] - w[jp]) % k or k
            top = abs(w[jm] - w[jp]) + k * (2 * inv + 3)
            for delta in range(first, top + 1, k):
                new = list(w)
                new[jm] -= delta
                new[jp] += delta
                tp = AffinePermutation(k, tuple(new))
                if inversion_count(tp) != inv + 1:
                    continue
                if not bruhat_leq(tau, tp):
                    raise AssertionError(f"{tp} has one more inversion but is not above {tau}")
                cover = CoverDatum(tp, jm, jp, delta)
                check_cover_equalities(tau, cover)
                found.append(cover)
    found.sort(key=lambda c: c.tau_prime.window)
    return found


def has_narrow_shape(tau: AffinePermutation, cover: CoverDatum) -> bool:
    """
    Whether a cover has the restricted form: j_- < j_+ with tau(j_-) < tau(j_+)
    and delta < k, or j_- > j_+ with delta = tau(j_-) - tau(j_+). Many covers
    do not; (-3,-10) < (-2,-11) for k = 2 is the smallest kind of example.
    """
    w, jm, jp, delta = tau.window, cover.j_minus, cover.j_plus, cover.delta
    if jm < jp:
        return w[jm] < w[jp] and delta < tau.k
    return delta == w[jm] - w[jp]


@dataclass(frozen=True)
class SplittingType:
    k: int
    e: tuple[int, ...]


def splitting_type(tau: AffinePermutation) -> SplittingType:
    """
    Recover the splitting type from slipface values: the number of entries
    e_i >= -a is s(ak+1, 0) - s((a-1)k+1, 0).
    """
    k = tau.k
    bound = 2 * deviation(tau) + 2 + k

    def at_least(a: int) -> int:
        return slipface(tau, a * k + 1, 0)[0] - slipface(tau, (a - 1) * k + 1, 0)[0]

    if at_least(-bound) != 0:
        raise AssertionError("splitting scan started above the stable range")
    e: list[int] = []
    prev = 0
    for a in range(-bound + 1, bound + 1):
        c = at_least(a)
        if c < prev or c > k:
            raise AssertionError(f"non-monotone splitting counts at a={a}")
        e.extend([-a] * (c - prev))
        prev = c
        if c == k:
            break
    if prev != k:
        raise AssertionError("splitting counts did not stabilise")
    return SplittingType(k, tuple(sorted(e)))


def splitting_codim(e) -> int:
    """Sum over ordered pairs of max(e_j - e_i - 1, 0)."""
    values = e.e if isinstance(e, SplittingType) else tuple(e)
    return sum(max(y - x - 1, 0) for x in values for y in values)
