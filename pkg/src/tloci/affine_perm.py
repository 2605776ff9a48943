"""
Window arithmetic for the extended k-affine symmetric group.

An element is a bijection tau of the integers with tau(n + k) = tau(n) + k,
stored by its window (tau(0), ..., tau(k-1)).

>>> tau = from_window(3, [0, 8, 10])
>>> tau.chi
-5
>>> evaluate(tau, 4), evaluate(tau, -1)
(11, 7)
>>> slipface(from_window(3, [0, 5, 7]), 4, 0)
(2, 1)
"""

from __future__ import annotations

__all__ = [
    "AffinePermutation", "SlipfaceSpec", "SlipfaceError",
    "from_window", "identity", "simple_reflection", "translation",
    "evaluate", "compose", "invert", "shift", "slipface", "h_value",
    "slipface_table", "from_slipface", "deviation", "add_constant",
]

from dataclasses import dataclass, field
from typing import Iterable, Mapping


class SlipfaceError(ValueError):
    """Raised when a slipface table fails validation or is too narrow."""


@dataclass(frozen=True)
class AffinePermutation:
    """A k-periodic bijection of Z, given by its window."""
    k: int
    window: tuple[int, ...]
    chi: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        k, w = self.k, self.window
        if not isinstance(k, int) or k <= 0:
            raise ValueError(f"period must be a positive integer, got {k!r}")
        if len(w) != k:
            raise ValueError(f"window has length {len(w)}, expected {k}")
        residues = {x % k for x in w}
        if len(residues) != k:
            raise ValueError(f"window {list(w)} repeats a residue mod {k}")
        object.__setattr__(self, "chi", (k * (k - 1) // 2 - sum(w)) // k)

    def __call__(self, n: int) -> int:
        q, r = divmod(n, self.k)
        return self.window[r] + self.k * q

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.window) + ")"

    def to_json(self) -> dict:
        return {"k": self.k, "window": list(self.window), "chi": self.chi}


def from_window(k: int, window: Iterable[int]) -> AffinePermutation:
    """Validate and build a permutation from its window."""
    return AffinePermutation(k, tuple(int(x) for x in window))


def identity(k: int) -> AffinePermutation:
    return AffinePermutation(k, tuple(range(k)))


def simple_reflection(k: int, i: int) -> AffinePermutation:
    """The reflection swapping the residue classes of i and i+1 (with wrap)."""
    if k < 2:
        raise ValueError("simple reflections need k >= 2")
    if not 0 <= i < k:
        raise ValueError(f"reflection index {i} outside [0, {k})")
    w = []
    for n in range(k):
        if n % k == i:
            w.append(n + 1)
        elif n % k == (i + 1) % k:
            w.append(n - 1)
        else:
            w.append(n)
    return AffinePermutation(k, tuple(w))


def translation(k: int, n: int) -> AffinePermutation:
    """iota_n : m -> m - n, whose shift is n."""
    return AffinePermutation(k, tuple(j - n for j in range(k)))


def evaluate(tau: AffinePermutation, n: int) -> int:
    return tau(n)


def shift(tau: AffinePermutation) -> int:
    return tau.chi


def add_constant(tau: AffinePermutation, c: int) -> AffinePermutation:
    """tau + c, i.e. compose with a translation on the left."""
    return AffinePermutation(tau.k, tuple(x + c for x in tau.window))


def deviation(tau: AffinePermutation) -> int:
    """max |tau(j) - j| over the window."""
    return max(abs(x - j) for j, x in enumerate(tau.window))


def _check_same_k(alpha: AffinePermutation, beta: AffinePermutation) -> None:
    if alpha.k != beta.k:
        raise ValueError(f"mismatched periods {alpha.k} and {beta.k}")


def compose(alpha: AffinePermutation, beta: AffinePermutation) -> AffinePermutation:
    """(alpha o beta)(n) = alpha(beta(n)); beta acts first."""
    _check_same_k(alpha, beta)
    return AffinePermutation(alpha.k, tuple(alpha(x) for x in beta.window))


def invert(tau: AffinePermutation) -> AffinePermutation:
    k = tau.k
    w = [0] * k
    for j, x in enumerate(tau.window):
        q, r = divmod(x, k)
        w[r] = j - k * q
    return AffinePermutation(k, tuple(w))


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def slipface(tau: AffinePermutation, a: int, b: int) -> tuple[int, int]:
    """
    Return (s, h) where s = #{n >= b : tau(n) < a} and h = #{n < b : tau(n) >= a}.

    Each residue class r contributes the integers m with r + km >= b and
    w_r + km < a, which is an interval counted in closed form.
    """
    k = tau.k
    s = 0
    for r, w in enumerate(tau.window):
        hi = (a - 1 - w) // k
        lo = _ceil_div(b - r, k)
        if hi >= lo:
            s += hi - lo + 1
    h = s - (a - b + tau.chi)
    return s, h


def h_value(tau: AffinePermutation, a: int, b: int) -> int:
    return slipface(tau, a, b)[1]


@dataclass(frozen=True)
class SlipfaceSpec:
    """
    Finite portion of a slipface function: values for b in [0, k) and
    a in [a_lo, a_hi]. Everything else is implied by periodicity and by the
    asymptotic rows (0 below the table, chi + a - b above it).
    """
    k: int
    chi: int
    table: Mapping[tuple[int, int], int]
    a_lo: int
    a_hi: int

    def value(self, a: int, b: int) -> int:
        q, b0 = divmod(b, self.k)
        a0 = a - q * self.k
        if a0 < self.a_lo:
            return 0
        if a0 > self.a_hi:
            return self.chi + a0 - b0
        return self.table[(a0, b0)]


def slipface_table(tau: AffinePermutation, margin: int | None = None) -> SlipfaceSpec:
    """Tabulate s_tau on a window wide enough to reconstruct tau."""
    k = tau.k
    if margin is None:
        margin = k
    a_lo = min(tau.window) - margin
    a_hi = max(tau.window) + margin
    table = {
        (a, b): slipface(tau, a, b)[0]
        for b in range(k)
        for a in range(a_lo, a_hi + 1)
    }
    return SlipfaceSpec(k, tau.chi, table, a_lo, a_hi)


def validate_slipface(spec: SlipfaceSpec) -> None:
    """Check asymptotic boundary rows, unit steps and submodularity."""
    k, chi = spec.k, spec.chi
    if spec.a_hi - spec.a_lo < 2 * k:
        raise SlipfaceError(f"table rows [{spec.a_lo}, {spec.a_hi}] narrower than 2k")
    for b in range(k):
        for a in range(spec.a_lo, spec.a_hi + 1):
            if (a, b) not in spec.table:
                raise SlipfaceError(f"missing cell (a={a}, b={b})")
            if spec.table[(a, b)] < 0:
                raise SlipfaceError(f"negative value at (a={a}, b={b})")
        if spec.table[(spec.a_lo, b)] != 0:
            raise SlipfaceError(f"lower boundary cell (a={spec.a_lo}, b={b}) is not 0")
        if spec.table[(spec.a_hi, b)] != chi + spec.a_hi - b:
            raise SlipfaceError(
                f"upper boundary cell (a={spec.a_hi}, b={b}) is not chi + a - b"
            )
    s = spec.value
    for b in range(k):
        for a in range(spec.a_lo - 1, spec.a_hi + 1):
            if s(a + 1, b) - s(a, b) not in (0, 1):
                raise SlipfaceError(f"step in a at (a={a}, b={b}) is not 0 or 1")
            if s(a, b) - s(a, b + 1) not in (0, 1):
                raise SlipfaceError(f"step in b at (a={a}, b={b}) is not 0 or 1")
            if s(a + 1, b) - s(a, b) - s(a + 1, b + 1) + s(a, b + 1) < 0:
                raise SlipfaceError(f"submodularity fails at (a={a}, b={b})")


def from_slipface(spec: SlipfaceSpec) -> AffinePermutation:
    """
    Recover the unique permutation with the given slipface function.

    tau(b) is the least a with s(a+1, b) > s(a+1, b+1).
    """
    validate_slipface(spec)
    k = spec.k
    s = spec.value
    window = []
    for b in range(k):
        found = None
        for a in range(spec.a_lo - 1, spec.a_hi + 1):
            if s(a + 1, b) > s(a + 1, b + 1):
                found = a
                break
        if found is None or found <= spec.a_lo - 1:
            raise SlipfaceError(f"table too narrow to locate tau({b})")
        window.append(found)
    try:
        tau = from_window(k, window)
    except ValueError as exc:
        raise SlipfaceError(f"table does not come from a permutation: {exc}") from None
    if tau.chi != spec.chi:
        raise SlipfaceError(f"reconstructed shift {tau.chi} differs from {spec.chi}")
    for (a, b), v in spec.table.items():
        if slipface(tau, a, b)[0] != v:
            raise SlipfaceError(f"table disagrees with reconstruction at (a={a}, b={b})")
    return tau
