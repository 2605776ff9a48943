"""
Strata of the chain-of-elliptic-curves model, ramification schedules and
degree distributions.

A filled word has length g. Its non-bullet letters form a reduced word of
tau + chi, and bullets mark components where nothing is imposed.
"""

from __future__ import annotations

__all__ = [
    "BULLET", "FilledWord", "RamificationSchedule", "DegreeDistribution",
    "strata", "count_strata", "stratum_aspects", "filled_truncations",
    "ramification_schedule", "degree_distribution", "distribution_checks",
    "validate_filled_word",
]

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from .affine_perm import AffinePermutation, compose, identity, simple_reflection, slipface
from .twists import essential_twists, noncolliding
from .words import (
    ReducedWord, count_reduced_words, inversion_count, normalize_to_core,
    reduced_words, truncation_profile,
)

BULLET = "•"


@dataclass(frozen=True)
class FilledWord:
    tau: AffinePermutation
    g: int
    letters: tuple[int | None, ...]     # None marks a bullet

    @property
    def k(self) -> int:
        return self.tau.k

    @property
    def support(self) -> tuple[int, ...]:
        """1-based positions carrying a letter."""
        return tuple(i for i, m in enumerate(self.letters, start=1) if m is not None)

    def reduced_word(self) -> ReducedWord:
        return ReducedWord(self.k, tuple(m for m in self.letters if m is not None))

    def serialize(self) -> str:
        return " ".join(BULLET if m is None else str(m) for m in self.letters)

    @classmethod
    def parse(cls, tau: AffinePermutation, text: str) -> "FilledWord":
        tokens = text.replace(",", " ").split()
        letters = tuple(None if t in (BULLET, "*", ".") else int(t) for t in tokens)
        fw = cls(tau, len(letters), letters)
        validate_filled_word(fw)
        return fw

    def to_json(self) -> dict:
        return {
            "k": self.k, "g": self.g, "tau": list(self.tau.window),
            "letters": self.serialize(), "S": list(self.support),
        }


def validate_filled_word(fw: FilledWord) -> None:
    if len(fw.letters) != fw.g:
        raise ValueError(f"filled word has length {len(fw.letters)}, expected g={fw.g}")
    word = fw.reduced_word()
    profile = truncation_profile(word, check=False)
    if profile.windows[-1] != normalize_to_core(fw.tau).window:
        raise ValueError(f"letters do not multiply to tau + chi = {normalize_to_core(fw.tau)}")


def strata(tau: AffinePermutation, g: int) -> Iterator[FilledWord]:
    """Every (reduced word, support set) pair, as filled words of length g."""
    core = normalize_to_core(tau)
    length = inversion_count(tau)
    if g < length:
        return
    for word in reduced_words(core):
        for support in combinations(range(g), length):
            letters: list[int | None] = [None] * g
            for pos, m in zip(support, word.letters):
                letters[pos] = m
            yield FilledWord(tau, g, tuple(letters))


def count_strata(tau: AffinePermutation, g: int) -> int:
    length = inversion_count(tau)
    if g < length:
        return 0
    return count_reduced_words(normalize_to_core(tau)) * comb(g, length)


def _check_degree(fw: FilledWord, d: int) -> None:
    if d != fw.tau.chi + fw.g:
        raise ValueError(f"degree {d} differs from chi + g = {fw.tau.chi + fw.g}")


def stratum_aspects(fw: FilledWord, d: int) -> dict[int, tuple[int, int]]:
    """For each lettered component i: the multiplicities (m + i, d - m - i)."""
    _check_degree(fw, d)
    return {i: (m + i, d - m - i) for i, m in enumerate(fw.letters, start=1) if m is not None}


def filled_truncations(fw: FilledWord) -> list[AffinePermutation]:
    """T^{<=0}, ..., T^{<=g}; bullets repeat the previous truncation."""
    k = fw.k
    current = identity(k)
    out = [current]
    for m in fw.letters:
        if m is not None:
            current = compose(simple_reflection(k, m), current)
        out.append(current)
    return out


@dataclass(frozen=True)
class RamificationSchedule:
    d: int
    a: tuple[tuple[int, ...], ...]      # rows i = 0..g
    b: tuple[tuple[int, ...], ...]      # rows i = 1..g, stored at index i - 1

    def b_row(self, i: int) -> tuple[int, ...]:
        return self.b[i - 1]

    def to_tsv(self) -> str:
        k = len(self.a[0])
        head = "i\t" + "\t".join(f"a{j}" for j in range(k)) + "\t" + "\t".join(f"b{j}" for j in range(k))
        lines = [head]
        for i, row in enumerate(self.a):
            b = self.b[i - 1] if i >= 1 else ("",) * k
            lines.append("\t".join(str(x) for x in (i, *row, *b)))
        return "\n".join(lines) + "\n"


def ramification_schedule(fw: FilledWord, d: int) -> RamificationSchedule:
    """
    a^i_j = T^{<=i}(j) + e(j) + i and b^i_j = d + tau(j) + e(j) - a^i_j,
    validated for non-negativity, refinedness and non-colliding residues.
    """
    _check_degree(fw, d)
    tau, k = fw.tau, fw.k
    e = essential_twists(tau).e
    truncs = filled_truncations(fw)
    a = tuple(
        tuple(truncs[i](j) + e[j] + i for j in range(k))
        for i in range(fw.g + 1)
    )
    b = tuple(
        tuple(d + tau(j) + e[j] - a[i][j] for j in range(k))
        for i in range(1, fw.g + 1)
    )
    for i, row in enumerate(a):
        if min(row) < 0:
            raise AssertionError(f"negative vanishing order in row a^{i}")
    for i in range(1, fw.g + 1):
        if min(b[i - 1]) < 0:
            raise AssertionError(f"negative vanishing order in row b^{i}")
        for j in range(k):
            if a[i][j] + b[i - 1][j] != d + tau(j) + e[j]:
                raise AssertionError(f"node {i} is not refined at j={j}")
        column = a[i - 1]
        if len({(column[j] - e[j]) % k for j in range(k)}) != k:
            raise AssertionError(f"colliding residues at node {i}")
        if not noncolliding(tau, column):
            raise AssertionError(f"non-colliding check fails at node {i}")
    return RamificationSchedule(d, a, b)


@dataclass(frozen=True)
class DegreeDistribution:
    j: int
    d_vec: tuple[int, ...]
    classes: tuple[str, ...]


_CLASS_NAMES = {0: "trivial", 1: "general degree 1", 2: "node-pair"}


def degree_distribution(fw: FilledWord, j: int, d: int) -> DegreeDistribution:
    """Per component: 0 where j decreases, 2 where j increases, else 1."""
    _check_degree(fw, d)
    if any(m is None for m in fw.letters):
        raise ValueError("degree distributions need a word without bullets")
    if not 0 <= j < fw.k:
        raise ValueError(f"index {j} outside [0, {fw.k})")
    profile = truncation_profile(fw.reduced_word())
    vec = []
    for jp, jm in zip(profile.j_plus, profile.j_minus):
        vec.append(0 if jm == j else 2 if jp == j else 1)
    return DegreeDistribution(j, tuple(vec), tuple(_CLASS_NAMES[x] for x in vec))


def distribution_checks(fw: FilledWord, j: int, d: int) -> None:
    """Assert the partial-sum formulas and the count of trivial components."""
    dist = degree_distribution(fw, j, d)
    truncs = filled_truncations(fw)
    tau = fw.tau
    vec = dist.d_vec
    if sum(vec) != d + tau(j) - j:
        raise AssertionError(f"total degree fails for j={j}")
    for i in range(1, fw.g + 1):
        if sum(vec[: i - 1]) != truncs[i - 1](j) - j + i - 1:
            raise AssertionError(f"left partial sum fails at i={i}, j={j}")
        if sum(vec[i:]) != d + tau(j) - truncs[i](j) - i:
            raise AssertionError(f"right partial sum fails at i={i}, j={j}")
    if vec.count(0) != slipface(tau, tau(j) + 1, j)[1]:
        raise AssertionError(f"trivial-component count fails for j={j}")
