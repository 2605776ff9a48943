"""
k-inversions, reduced words, truncations, and braid moves.

Words are stored in application order: letters (m_1, ..., m_l) stand for
the product sigma_{m_l} o ... o sigma_{m_1}, so m_1 acts first. The
display order is the reverse, which is how such products are usually
written on the page.

>>> from tloci.affine_perm import from_window
>>> [w.display() for w in reduced_words(from_window(3, [-3, 2, 4]))]
['s0 s1 s2']
"""

from __future__ import annotations

__all__ = [
    "ReducedWord", "TruncationStep", "TruncationProfile", "WordError",
    "k_inversions", "inversion_count", "pairwise_inversions",
    "codim1_pair_count", "normalize_to_core", "right_descents",
    "reduced_words", "count_reduced_words", "word_product",
    "truncation_profile", "index_property_failures", "apply_braid_move", "applicable_moves",
    "BraidGraph", "braid_graph",
]

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .affine_perm import AffinePermutation, add_constant, compose, identity, simple_reflection


class WordError(ValueError):
    """Raised for non-reduced words and inapplicable braid moves."""


@dataclass(frozen=True)
class ReducedWord:
    k: int
    letters: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def display_letters(self) -> tuple[int, ...]:
        """Letters in page order, leftmost acting last."""
        return tuple(reversed(self.letters))

    def display(self) -> str:
        return " ".join(f"s{m}" for m in self.display_letters())

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "application_order": list(self.letters),
            "display_order": list(self.display_letters()),
        }


def k_inversions(tau: AffinePermutation) -> tuple[int, list[tuple[int, int]]]:
    """
    Inversion classes of tau, one representative (a, b) per class with
    a in [0, k), a < b and tau(a) > tau(b).
    """
    k = tau.k
    reps = []
    for a in range(k):
        ta = tau(a)
        for r, w in enumerate(tau.window):
            lo = -((r - a - 1) // k)        # least m with r + k m > a
            hi = (ta - 1 - w) // k          # largest m with w + k m < tau(a)
            reps.extend((a, r + k * m) for m in range(lo, hi + 1))
    reps.sort()
    return len(reps), reps


def inversion_count(tau: AffinePermutation) -> int:
    """inv_k via the residue-pair floor formula; O(k^2)."""
    k = tau.k
    return sum(
        pairwise_inversions(tau, j1, j2)
        for j1 in range(k)
        for j2 in range(j1 + 1, k)
    )


def pairwise_inversions(alpha: AffinePermutation, j1: int, j2: int) -> int:
    """Number of inversion classes between the residue classes of j1 and j2."""
    k = alpha.k
    if j1 == j2:
        raise ValueError("pairwise inversions need two distinct indices")
    for j in (j1, j2):
        if not 0 <= j < k:
            raise ValueError(f"index {j} outside [0, {k})")
    x, y = alpha.window[j1], alpha.window[j2]
    if x > y:
        return (x - y) // k + (j1 < j2)
    return (y - x) // k + (j1 > j2)


def codim1_pair_count(alpha: AffinePermutation, j1: int, j2: int) -> int:
    """Inversion classes (a, b) with a = j1 mod k, b = j2 mod k (ordered version)."""
    k = alpha.k
    x, y = alpha.window[j1], alpha.window[j2]
    return max((x - y) // k, 0) + int(j1 < j2 and x > y)


def normalize_to_core(tau: AffinePermutation) -> AffinePermutation:
    """tau + chi, which has shift 0."""
    return add_constant(tau, tau.chi)


def right_descents(alpha: AffinePermutation) -> list[int]:
    return [i for i in range(alpha.k) if alpha(i) > alpha(i + 1)]


def _require_core(alpha: AffinePermutation) -> None:
    if alpha.chi != 0:
        raise WordError(f"reduced words need shift 0, got shift {alpha.chi}")


def reduced_words(alpha: AffinePermutation) -> Iterator[ReducedWord]:
    """Stream every reduced word of alpha once, by peeling right descents."""
    _require_core(alpha)
    k = alpha.k
    reflections = [simple_reflection(k, i) for i in range(k)] if k >= 2 else []

    # a right descent i means alpha = (alpha o sigma_i) o sigma_i, so i acts first
    def rec(x: AffinePermutation, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        descents = right_descents(x)
        if not descents:
            yield prefix
            return
        for i in descents:
            yield from rec(compose(x, reflections[i]), prefix + (i,))

    for letters in rec(alpha, ()):
        yield ReducedWord(k, letters)


def count_reduced_words(alpha: AffinePermutation) -> int:
    """Number of reduced words, memoised on windows."""
    _require_core(alpha)
    k = alpha.k
    reflections = [simple_reflection(k, i) for i in range(k)] if k >= 2 else []

    @lru_cache(maxsize=None)
    def count(window: tuple[int, ...]) -> int:
        x = AffinePermutation(k, window)
        descents = right_descents(x)
        if not descents:
            return 1
        return sum(count(compose(x, reflections[i]).window) for i in descents)

    return count(alpha.window)


def word_product(k: int, letters) -> AffinePermutation:
    """sigma_{m_l} o ... o sigma_{m_1} for letters in application order."""
    x = identity(k)
    for m in letters:
        x = compose(simple_reflection(k, m), x)
    return x


@dataclass(frozen=True)
class TruncationStep:
    t: int
    window: tuple[int, ...]
    j_plus: int
    j_minus: int


@dataclass(frozen=True)
class TruncationProfile:
    word: ReducedWord
    windows: tuple[tuple[int, ...], ...]    # T^{<=0}, ..., T^{<=l}
    j_plus: tuple[int, ...]                 # indexed by t - 1
    j_minus: tuple[int, ...]

    def truncation(self, t: int) -> AffinePermutation:
        return AffinePermutation(self.word.k, self.windows[t])

    def steps(self) -> list[TruncationStep]:
        return [
            TruncationStep(t, self.windows[t], self.j_plus[t - 1], self.j_minus[t - 1])
            for t in range(1, len(self.windows))
        ]


def truncation_profile(word: ReducedWord, check: bool = True) -> TruncationProfile:
    """
    Compute every truncation T^{<=t} = sigma_{m_t} o T^{<=t-1} with its
    increasing and decreasing indices. With ``check`` the monotonicity
    properties of those indices are verified along the way.
    """
    k = word.k
    current = identity(k)
    windows = [current.window]
    j_plus, j_minus = [], []
    length = 0
    for t, m in enumerate(word.letters, start=1):
        if not 0 <= m < k:
            raise WordError(f"letter {m} outside [0, {k})")
        nxt = compose(simple_reflection(k, m), current)
        new_len = inversion_count(nxt)
        if new_len != length + 1:
            raise WordError(f"word {list(word.letters)} is not reduced at step {t}")
        length = new_len
        jp = next(j for j in range(k) if nxt.window[j] == current.window[j] + 1)
        jm = next(j for j in range(k) if nxt.window[j] == current.window[j] - 1)
        j_plus.append(jp)
        j_minus.append(jm)
        windows.append(nxt.window)
        current = nxt
    profile = TruncationProfile(word, tuple(windows), tuple(j_plus), tuple(j_minus))
    if check:
        _check_increasing_decreasing(profile)
    return profile


def index_property_failures(profile: TruncationProfile) -> list[tuple[str, int]]:
    """
    Steps violating the properties of the increasing/decreasing indices.

    Property names:
      "congruence": T(j+) = T(j-) + 1 mod k and T(j-) < T(j+);
      "adjacent_implies_order": T(j+) = T(j-) + 1 forces j+ < j-;
      "order_implies_adjacent": j+ < j- forces T(j+) = T(j-) + 1;
      "gap_monotone": T(j+) - T(j-) never shrinks at later steps.
    The third one does not hold in general: it fails for the word (0,1,0,2,1,0,2,1)
    of (5,3,-5) at step 4, so it is reported but never enforced.
    """
    k = profile.word.k
    windows = profile.windows
    failures = []
    for t0 in range(1, len(windows)):
        jp, jm = profile.j_plus[t0 - 1], profile.j_minus[t0 - 1]
        w = windows[t0]
        if (w[jp] - w[jm] - 1) % k != 0 or not w[jm] < w[jp]:
            failures.append(("congruence", t0))
        adjacent = w[jp] == w[jm] + 1
        if adjacent and not jp < jm:
            failures.append(("adjacent_implies_order", t0))
        if jp < jm and not adjacent:
            failures.append(("order_implies_adjacent", t0))
        gap = w[jp] - w[jm]
        if any(windows[t][jp] - windows[t][jm] < gap for t in range(t0 + 1, len(windows))):
            failures.append(("gap_monotone", t0))
    return failures


def _check_increasing_decreasing(profile: TruncationProfile) -> None:
    for name, t in index_property_failures(profile):
        if name != "order_implies_adjacent":
            raise AssertionError(f"index property {name} fails at step {t}")


def applicable_moves(word: ReducedWord) -> list[tuple[str, int]]:
    """All (kind, position) pairs, positions 1-based, that apply to word."""
    k, m = word.k, word.letters
    moves = []
    for i in range(1, len(m)):
        diff = (m[i - 1] - m[i]) % k
        if diff not in (0, 1, k - 1):
            moves.append(("flip", i))
    if k >= 3:
        for i in range(1, len(m) - 1):
            x, y, z = m[i - 1], m[i], m[i + 1]
            if x == z and (x - y) % k in (1, k - 1):
                moves.append(("shuffle", i))
    return moves


def apply_braid_move(word: ReducedWord, kind: str, i: int) -> ReducedWord:
    """Apply a flip or shuffle at 1-based position i."""
    k, m = word.k, list(word.letters)
    if kind == "flip":
        if not 1 <= i < len(m):
            raise WordError(f"flip position {i} out of range")
        diff = (m[i - 1] - m[i]) % k
        if diff == 0:
            raise WordError("equal adjacent letters: word is not reduced")
        if diff in (1, k - 1):
            raise WordError(f"letters {m[i - 1]} and {m[i]} are adjacent mod {k}; no flip")
        m[i - 1], m[i] = m[i], m[i - 1]
    elif kind == "shuffle":
        if k == 2:
            raise WordError("shuffles are not available for k = 2")
        if not 1 <= i < len(m) - 1:
            raise WordError(f"shuffle position {i} out of range")
        x, y, z = m[i - 1], m[i], m[i + 1]
        if x != z or (x - y) % k not in (1, k - 1):
            raise WordError(f"letters {x},{y},{z} do not admit a shuffle")
        m[i - 1], m[i], m[i + 1] = y, x, y
    else:
        raise WordError(f"unknown move kind {kind!r}")
    return ReducedWord(k, tuple(m))


@dataclass(frozen=True)
class BraidGraph:
    vertices: tuple[ReducedWord, ...]
    edges: tuple[tuple[int, int, str, int], ...]   # (source, target, kind, position)

    @property
    def connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict[int, set[int]] = {v: set() for v in range(len(self.vertices))}
        for s, t, _, _ in self.edges:
            adj[s].add(t)
            adj[t].add(s)
        seen, stack = {0}, [0]
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(self.vertices)


def braid_graph(alpha: AffinePermutation) -> BraidGraph:
    words = sorted(reduced_words(alpha), key=lambda w: w.letters)
    index = {w: n for n, w in enumerate(words)}
    edges = []
    for n, w in enumerate(words):
        for kind, i in applicable_moves(w):
            target = index[apply_braid_move(w, kind, i)]
            if n < target:
                edges.append((n, target, kind, i))
    return BraidGraph(tuple(words), tuple(edges))
