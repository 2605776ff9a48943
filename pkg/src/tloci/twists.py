"""
Essential twists and the order on twists.

A twist is a pair (a, b) with b in {-k+1, ..., 0}. The essential twists of
tau are (tau(j), e(j)), where e(j) = -j if some earlier window entry is
larger than tau(j), and 0 otherwise.
"""

from __future__ import annotations

__all__ = [
    "EssentialTwistSet", "TwistStep", "essential_twists", "twist_prec",
    "noncolliding", "noncolliding_at", "new_section_budget",
    "new_section_budget_rhs", "inversion_identity", "h1_equal",
]

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .affine_perm import AffinePermutation, slipface
from .words import inversion_count


class TwistStep(NamedTuple):
    q: int
    r: int
    s: int


@dataclass(frozen=True)
class EssentialTwistSet:
    tau: AffinePermutation
    e: tuple[int, ...]

    @property
    def entries(self) -> list[tuple[int, int, int]]:
        return [(j, self.tau.window[j], self.e[j]) for j in range(self.tau.k)]

    def twist(self, j: int) -> tuple[int, int]:
        return self.tau.window[j], self.e[j]

    def below(self, j: int) -> list[int]:
        """Indices j' whose twist precedes the twist of j."""
        k = self.tau.k
        return [
            jp for jp in range(k)
            if jp != j and twist_prec(self.twist(jp), self.twist(j), k) is not None
        ]


def essential_twists(tau: AffinePermutation) -> EssentialTwistSet:
    w = tau.window
    e = []
    running_max = None
    for j, x in enumerate(w):
        e.append(-j if running_max is not None and running_max > x else 0)
        running_max = x if running_max is None else max(running_max, x)
    return EssentialTwistSet(tau, tuple(e))


def _check_twist(t: tuple[int, int], k: int) -> None:
    if not -k + 1 <= t[1] <= 0:
        raise ValueError(f"twist {t} has second coordinate outside [{-k + 1}, 0]")


def twist_prec(t1: tuple[int, int], t2: tuple[int, int], k: int) -> TwistStep | None:
    """
    None unless t1 precedes t2. Otherwise the unique (q, r, s) with
    q >= 0 and 0 <= r, s < k such that moving up from t1 by q k + r in the
    first coordinate and s in the second lands on t2 modulo the relation
    that trades k in one coordinate for k in the other.
    """
    _check_twist(t1, k)
    _check_twist(t2, k)
    (a1, b1), (a2, b2) = t1, t2
    if not ((a1 < a2 and b1 <= b2) or a1 + k < a2):
        return None
    s = (b2 - b1) % k
    q, r = divmod(a2 - a1 + (b2 - b1) - s, k)
    return TwistStep(q, r, s)


def noncolliding_at(tau: AffinePermutation, v: Sequence[int], top: tuple[int, int]) -> bool:
    """Check the non-colliding congruences using the common upper twist ``top``."""
    k = tau.k
    if len(v) != k:
        raise ValueError(f"expected {k} vanishing orders, got {len(v)}")
    ts = essential_twists(tau)
    steps = [twist_prec(ts.twist(j), top, k) for j in range(k)]
    if any(step is None for step in steps):
        raise ValueError(f"twist {top} is not above every essential twist")
    residues = [(v[j] + steps[j].s) % k for j in range(k)]
    return len(set(residues)) == k


def noncolliding(tau: AffinePermutation, v: Sequence[int]) -> bool:
    """True iff the vanishing orders v are non-colliding for tau."""
    return noncolliding_at(tau, v, (max(tau.window) + tau.k + 1, 0))


def new_section_budget(tau: AffinePermutation, j: int) -> int:
    """Sum of q + 1 over the essential twists strictly below the j-th one."""
    if not 0 <= j < tau.k:
        raise ValueError(f"index {j} outside [0, {tau.k})")
    ts = essential_twists(tau)
    total = 0
    for jp in ts.below(j):
        total += twist_prec(ts.twist(jp), ts.twist(j), tau.k).q + 1
    return total


def new_section_budget_rhs(tau: AffinePermutation, j: int) -> int:
    """s_tau(tau(j) + 1, -e(j)) - 1, the closed form of the budget."""
    e = essential_twists(tau).e
    return slipface(tau, tau.window[j] + 1, -e[j])[0] - 1


def inversion_identity(tau: AffinePermutation) -> tuple[int, int]:
    """(sum over j of h(tau(j)+1, -e(j)), inv_k(tau)); the two agree."""
    e = essential_twists(tau).e
    lhs = sum(slipface(tau, x + 1, -e[j])[1] for j, x in enumerate(tau.window))
    return lhs, inversion_count(tau)


def h1_equal(tau: AffinePermutation, j: int) -> tuple[int, int]:
    """(h(tau(j)+1, j), h(tau(j)+1, -e(j))); the two agree."""
    e = essential_twists(tau).e
    a = tau.window[j] + 1
    return slipface(tau, a, j)[1], slipface(tau, a, -e[j])[1]
