"""
Monodromy tuples of degree-k covers of the line, totally ramified over two
points, and the moves relating tuples in the same braid orbit.

Permutations of {0, ..., k-1} are tuples p with p[x] the image of x. Products
apply the rightmost factor first. The monodromy around 0 is the k-cycle
c = (0, 1, ..., k-1), so c[x] = x + 1 mod k.

Moves, with 1-based positions:
  E1        conjugate every entry by c, shifting labels up by one;
  E2(i)     (t_i, t_{i+1}) -> (t_{i+1}, t_{i+1} t_i t_{i+1});
  E3(i)     conjugate entries i+1, ..., r by u_i = c t_1 ... t_i, i.e. t -> u t u^-1.
Each has an inverse, written E1^-1, E2^-1(i), E3^-1(i).

>>> t = from_text("k=6;(0,2)(2,5)")
>>> std, witness = standardize(t)
>>> to_text(std), replay(t, witness) == std
('k=6;(0,1)(0,1)', True)
"""

from __future__ import annotations

__all__ = [
    "MonodromyTuple", "Move", "HurwitzError", "TupleSyntaxError", "validate_tuple",
    "parse_text", "from_text",
    "to_text", "total_product", "is_k_cycle", "apply_move", "parse_move",
    "parse_moves", "replay", "invariant_d", "standardize", "is_standard",
    "classify", "canonical", "orbit_bfs", "count_orbits",
    "product_condition_tuples", "braid_sigma", "braid_epsilon", "block_loop",
    "epsilon_i", "omega_composite", "perm_mul", "perm_inv", "transposition",
    "base_cycle",
]

import re
from dataclasses import dataclass
from itertools import product
from math import gcd, lcm
from typing import Iterable, Iterator, NamedTuple, Sequence

Perm = tuple[int, ...]
Pair = tuple[int, int]


class HurwitzError(ValueError):
    """Raised for malformed tuples, bad move indices and guard violations."""


# --- permutations -----------------------------------------------------------

def perm_mul(p: Perm, q: Perm) -> Perm:
    """p o q, with q applied first."""
    return tuple(p[x] for x in q)


def perm_inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def transposition(k: int, a: int, b: int) -> Perm:
    p = list(range(k))
    p[a], p[b] = b, a
    return tuple(p)


def base_cycle(k: int) -> Perm:
    return tuple((x + 1) % k for x in range(k))


def _cycle_count(p: Perm) -> int:
    seen, count = set(), 0
    for x in range(len(p)):
        if x not in seen:
            count += 1
            while x not in seen:
                seen.add(x)
                x = p[x]
    return count


def _norm(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


def _conj(p: Perm, t: Pair) -> Pair:
    """p t p^-1 for a transposition t."""
    return _norm(p[t[0]], p[t[1]])


# --- tuples ----------------------------------------------------------------

@dataclass(frozen=True)
class MonodromyTuple:
    k: int
    transpositions: tuple[Pair, ...]

    @property
    def r(self) -> int:
        return len(self.transpositions)

    @property
    def g(self) -> int | None:
        return self.r // 2 if self.r % 2 == 0 else None

    def to_json(self) -> dict:
        return {"k": self.k, "transpositions": [list(t) for t in self.transpositions],
                "text": to_text(self)}


def validate_tuple(k: int, transpositions: Iterable[Sequence[int]]) -> MonodromyTuple:
    if not isinstance(k, int) or k < 2:
        raise HurwitzError(f"need k >= 2, got {k!r}")
    out = []
    for t in transpositions:
        if len(t) != 2:
            raise HurwitzError(f"{tuple(t)} is not a pair")
        a, b = int(t[0]), int(t[1])
        if not (0 <= a < k and 0 <= b < k):
            raise HurwitzError(f"label out of range in ({a},{b}) for k={k}")
        if a == b:
            raise HurwitzError(f"({a},{b}) is not a transposition")
        out.append(_norm(a, b))
    return MonodromyTuple(k, tuple(out))


_TEXT = re.compile(r"^\s*k\s*=\s*(\d+)\s*;\s*((?:\(\s*\d+\s*,\s*\d+\s*\)\s*)*)$")


class TupleSyntaxError(HurwitzError):
    """The text is not of the form 'k=6;(0,2)(2,5)'."""


def parse_text(text: str) -> tuple[int, list[Pair]]:
    """Split 'k=6;(0,2)(2,5)' into k and its pairs, without validating labels."""
    m = _TEXT.match(text)
    if not m:
        raise TupleSyntaxError(f"cannot parse tuple {text!r}")
    pairs = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", m.group(2))
    return int(m.group(1)), [(int(a), int(b)) for a, b in pairs]


def from_text(text: str) -> MonodromyTuple:
    """Parse and validate the form 'k=6;(0,2)(2,5)'."""
    return validate_tuple(*parse_text(text))


def to_text(t: MonodromyTuple) -> str:
    return f"k={t.k};" + "".join(f"({a},{b})" for a, b in t.transpositions)


def total_product(t: MonodromyTuple) -> tuple[Perm, bool]:
    """c t_1 ... t_r and whether it is a k-cycle."""
    p = base_cycle(t.k)
    for a, b in t.transpositions:
        p = perm_mul(p, transposition(t.k, a, b))
    return p, _cycle_count(p) == 1


def is_k_cycle(t: MonodromyTuple) -> bool:
    return total_product(t)[1]


# --- moves -----------------------------------------------------------------

class Move(NamedTuple):
    kind: str           # "E1", "E2" or "E3"
    index: int          # 0 for E1
    inverse: bool = False

    def __str__(self) -> str:
        inv = "^-1" if self.inverse else ""
        return f"E1{inv}" if self.kind == "E1" else f"{self.kind}{inv}({self.index})"


_MOVE = re.compile(r"^\s*(E[123])\s*(\^-1)?\s*(?:\(\s*(\d+)\s*\))?\s*$")


def parse_move(text: str) -> Move:
    m = _MOVE.match(text)
    if not m:
        raise HurwitzError(f"cannot parse move {text!r}")
    kind, inv, idx = m.group(1), bool(m.group(2)), m.group(3)
    if kind == "E1":
        if idx is not None:
            raise HurwitzError("E1 takes no index")
        return Move("E1", 0, inv)
    if idx is None:
        raise HurwitzError(f"{kind} needs an index")
    return Move(kind, int(idx), inv)


def parse_moves(text: str) -> list[Move]:
    parts = [p for p in re.split(r"[\s,;]+", text.strip()) if p]
    return [parse_move(p) for p in parts]


def _apply(k: int, ts: tuple[Pair, ...], move: Move) -> tuple[Pair, ...]:
    r = len(ts)
    if move.kind == "E1":
        c = base_cycle(k)
        p = perm_inv(c) if move.inverse else c
        return tuple(_conj(p, t) for t in ts)
    i = move.index
    if not 1 <= i < r:
        raise HurwitzError(f"{move} needs 1 <= index < {r}")
    if move.kind == "E2":
        x, y = ts[i - 1], ts[i]
        if move.inverse:
            new = (_conj(transposition(k, *x), y), x)
        else:
            new = (y, _conj(transposition(k, *y), x))
        return ts[: i - 1] + new + ts[i + 1:]
    if move.kind == "E3":
        u = base_cycle(k)
        for a, b in ts[:i]:
            u = perm_mul(u, transposition(k, a, b))
        if move.inverse:
            u = perm_inv(u)
        return ts[:i] + tuple(_conj(u, t) for t in ts[i:])
    raise HurwitzError(f"unknown move kind {move.kind!r}")


def apply_move(t: MonodromyTuple, move: Move | str) -> MonodromyTuple:
    if isinstance(move, str):
        move = parse_move(move)
    return MonodromyTuple(t.k, _apply(t.k, t.transpositions, move))


def replay(t: MonodromyTuple, moves: Iterable[Move | str]) -> MonodromyTuple:
    for mv in moves:
        t = apply_move(t, mv)
    return t


def invariant_d(t: MonodromyTuple) -> int:
    """gcd(k, b_1 - a_1, ..., b_r - a_r)."""
    if not t.transpositions:
        raise HurwitzError("invariant needs a non-empty tuple")
    d = t.k
    for a, b in t.transpositions:
        d = gcd(d, b - a)
    return d


# --- standardization ----------------------------------------------------------

class _Recorder:
    def __init__(self, t: MonodromyTuple):
        self.k = t.k
        self.entries = t.transpositions
        self.moves: list[Move] = []

    def apply(self, move: Move) -> None:
        self.entries = _apply(self.k, self.entries, move)
        self.moves.append(move)


class _Frame:
    """
    A window onto entries offset+1 .. offset+length of the recorded tuple,
    read in relabelled coordinates: real label labels[v] is virtual label v.

    The frame is only built where the prefix product u_offset permutes the
    labels in the frame cyclically, as v -> v + 1. Virtual moves then
    translate to real moves by shifting positions by offset, with the
    virtual E1 becoming the real E3 at the offset.
    """

    def __init__(self, rec: _Recorder, offset: int, length: int, labels: Sequence[int]):
        self.rec = rec
        self.offset = offset
        self.length = length
        self.labels = list(labels)
        self.index = {x: v for v, x in enumerate(self.labels)}
        self.k = len(self.labels)

    def entries(self) -> list[Pair]:
        window = self.rec.entries[self.offset:self.offset + self.length]
        return [_norm(self.index[a], self.index[b]) for a, b in window]

    def move(self, kind: str, i: int, inverse: bool = False) -> None:
        if kind == "E3" and i == 0:
            if self.offset == 0:
                self.rec.apply(Move("E1", 0, inverse))
            else:
                self.rec.apply(Move("E3", self.offset, inverse))
            return
        if not 1 <= i < self.length:
            raise AssertionError(f"frame move {kind}({i}) outside frame of length {self.length}")
        self.rec.apply(Move(kind, i + self.offset, inverse))

    def sub(self, start: int, length: int, virtual_labels: Sequence[int] | None = None) -> "_Frame":
        labels = self.labels if virtual_labels is None else [self.labels[v] for v in virtual_labels]
        return _Frame(self.rec, self.offset + start, length, labels)


def _split_standard(entries: Sequence[Pair]) -> tuple[int, list[int]]:
    """Length of the greedy paired prefix, and the second labels of the rest."""
    p = 0
    while p + 1 < len(entries) and entries[p] == entries[p + 1]:
        p += 2
    return p, [b for _, b in entries[p:]]


def is_standard(t: MonodromyTuple | Sequence[Pair]) -> bool:
    """Paired prefix followed by (0, b_1), ..., (0, b_m) with increasing b."""
    entries = t.transpositions if isinstance(t, MonodromyTuple) else tuple(t)
    p, tail = _split_standard(entries)
    if any(a != 0 for a, _ in entries[p:]):
        return False
    return all(x < y for x, y in zip(tail, tail[1:]))


def _shift_to_zero(frame: _Frame, pos: int) -> None:
    """Conjugate entries pos+1.. by the frame's c until entry pos+1 contains 0."""
    a, b = frame.entries()[pos]
    for _ in range((frame.k - a) % frame.k):
        frame.move("E3", pos)


def _pair_reduce(frame: _Frame) -> None:
    """Turn ((0, b), (u, v)) with u in [1, b] and v in [b+1, k] into ((0, d), (0, d))."""
    k = frame.k
    while True:
        (z, b), second = frame.entries()
        assert z == 0
        pi = perm_mul(base_cycle(k), transposition(k, 0, b))
        best = None
        cur = second
        for j in range(lcm(b, k - b)):
            if cur[0] == 0 and cur[1] <= b and (best is None or cur[1] < best[1]):
                best = (j, cur[1])
            cur = _conj(pi, cur)
        assert best is not None, "pair reduction found no (0, w) state"
        j, w = best
        for _ in range(j):
            frame.move("E3", 1)
        if w == b:
            return
        frame.move("E2", 1)


def _interval(x: int, bs: Sequence[int], k: int) -> int:
    """Index i of the arc [b_{i-1}+1, b_i] containing x, with b_0 = 0, b_{m+1} = k."""
    x = x or k
    for i, b in enumerate(list(bs) + [k]):
        if x <= b:
            return i
    raise AssertionError("label outside the circle")


def _integrate_last(frame: _Frame) -> None:
    """The first length-1 entries are standard; make all of them standard."""
    k = frame.k
    while True:
        entries = frame.entries()
        p, bs = _split_standard(entries[:-1])
        u, v = entries[-1]
        m = len(bs)
        if m == 0:
            _shift_to_zero(frame, p)
            return
        iu, iv = _interval(u, bs, k), _interval(v, bs, k)
        if iu != 0 and iv != 0:
            # both marked points avoid the first arc: recurse on the complement
            b1 = bs[0]
            sub = frame.sub(p + 1, m, [0] + list(range(b1 + 1, k)))
            _integrate_last(sub)
            pairs, _ = _split_standard(sub.entries())
            for q in range(pairs):
                frame.move("E2", p + 1 + q, inverse=True)
            return
        if m == 1 and iu != iv:
            _pair_reduce(frame.sub(p, 2))
            return
        # some arc other than the first misses both points: rotate
        for pos in range(p + m - 1, p, -1):
            frame.move("E2", pos)
        for _ in range(bs[-1]):
            frame.move("E3", p, inverse=True)


def _swap_blocks(frame: _Frame, q: int) -> None:
    """(A, A, B, B) at 1-based positions q..q+3 -> (B, B, A, A)."""
    for i in (q + 1, q + 2, q, q + 1):
        frame.move("E2", i)


def _subtract_blocks(frame: _Frame, q: int, x: int) -> None:
    """((0,x),(0,x),(0,y),(0,y)) at q..q+3, x < y -> ((0,x),(0,x),(0,y-x),(0,y-x))."""
    for i in (q + 1, q + 2, q + 2, q + 1):
        frame.move("E2", i, inverse=True)
    for _ in range(x):
        frame.move("E3", q + 1, inverse=True)
    if q + 3 < frame.length:
        for _ in range(x):
            frame.move("E3", q + 3)


def _gcd_adjacent(frame: _Frame, block: int) -> None:
    q = 2 * block + 1
    while True:
        entries = frame.entries()
        x, y = entries[q - 1][1], entries[q + 1][1]
        if x == y:
            return
        if x > y:
            _swap_blocks(frame, q)
            x, y = y, x
        _subtract_blocks(frame, q, x)


def _euclid(frame: _Frame) -> None:
    """All-paired tuple -> constant tuple ((0, d), ..., (0, d))."""
    n = frame.length // 2
    for block in range(n):
        _shift_to_zero(frame, 2 * block)
    for block in range(n - 1):
        _gcd_adjacent(frame, block)
    _pair_reduce(frame.sub(frame.length - 2, 2))
    for block in range(n - 2, -1, -1):
        _gcd_adjacent(frame, block)


def standardize(t: MonodromyTuple) -> tuple[MonodromyTuple, list[Move]]:
    """
    A standard tuple equivalent to t, with the list of moves reaching it.
    Tuples whose total product is a k-cycle end up constant, ((0,d), ..., (0,d)).
    """
    rec = _Recorder(t)
    top = _Frame(rec, 0, t.r, range(t.k))
    for p in range(1, t.r + 1):
        _integrate_last(top.sub(0, p))
    p, bs = _split_standard(rec.entries)
    if t.r and not bs:
        _euclid(top)
    result = MonodromyTuple(t.k, rec.entries)
    if not is_standard(result):
        raise AssertionError(f"standardization ended at non-standard {to_text(result)}")
    return result, rec.moves


def classify(t: MonodromyTuple) -> int:
    """The orbit label d of a tuple with even positive length and k-cycle product."""
    if t.r == 0 or t.r % 2:
        raise HurwitzError(f"classification needs even positive length, got {t.r}")
    if not is_k_cycle(t):
        raise HurwitzError("total product is not a k-cycle")
    d = invariant_d(t)
    std, _ = standardize(t)
    if set(std.transpositions) != {(0, d)}:
        raise AssertionError(f"standard form {to_text(std)} disagrees with d={d}")
    return d


# --- orbits ------------------------------------------------------------------

def canonical(t: MonodromyTuple) -> tuple[Pair, ...]:
    """Lexicographically least tuple among the label shifts of t."""
    k = t.k
    return min(
        tuple(_norm((a + s) % k, (b + s) % k) for a, b in t.transpositions)
        for s in range(k)
    )


def _neighbours(k: int, ts: tuple[Pair, ...]) -> Iterator[tuple[Pair, ...]]:
    for i in range(1, len(ts)):
        for kind in ("E2", "E3"):
            for inv in (False, True):
                yield _apply(k, ts, Move(kind, i, inv))


def _guard(k: int, r: int) -> None:
    if k > 8 or r > 4:
        raise HurwitzError(f"orbit search limited to k <= 8 and r <= 4, got k={k}, r={r}")


def orbit_bfs(t: MonodromyTuple) -> list[tuple[Pair, ...]]:
    """The orbit of t, as sorted canonical representatives."""
    _guard(t.k, t.r)
    start = canonical(t)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for ts in frontier:
            for nb in _neighbours(t.k, ts):
                c = canonical(MonodromyTuple(t.k, nb))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(seen)


def product_condition_tuples(k: int, g: int) -> Iterator[MonodromyTuple]:
    pairs = [(a, b) for a in range(k) for b in range(a + 1, k)]
    for ts in product(pairs, repeat=2 * g):
        t = MonodromyTuple(k, ts)
        if is_k_cycle(t):
            yield t


def count_orbits(k: int, g: int) -> list[list[tuple[Pair, ...]]]:
    """Partition the product-condition tuples of length 2g into orbits."""
    _guard(k, 2 * g)
    remaining = {canonical(t) for t in product_condition_tuples(k, g)}
    orbits = []
    while remaining:
        start = min(remaining)
        orbit = orbit_bfs(MonodromyTuple(k, start))
        orbits.append(orbit)
        remaining.difference_update(orbit)
    return orbits


# --- raw braid actions carrying the base monodromy -------------------------

def braid_sigma(c: Perm, taus: Sequence[Perm], i: int) -> tuple[Perm, list[Perm]]:
    """Half twist of x_i and x_{i+1} (1-based)."""
    taus = list(taus)
    x, y = taus[i - 1], taus[i]
    taus[i - 1], taus[i] = y, perm_mul(perm_inv(y), perm_mul(x, y))
    return c, taus


def braid_epsilon(c: Perm, taus: Sequence[Perm]) -> tuple[Perm, list[Perm]]:
    """Loop of x_1 around 0."""
    u = perm_mul(c, taus[0])
    ui = perm_inv(u)
    return perm_mul(ui, perm_mul(c, u)), [perm_mul(ui, perm_mul(taus[0], u))] + list(taus[1:])


def block_loop(c: Perm, taus: Sequence[Perm], i: int) -> tuple[Perm, list[Perm]]:
    """x_1, ..., x_i looped once around 0 together, in closed form."""
    u = c
    for x in taus[:i]:
        u = perm_mul(u, x)
    ui = perm_inv(u)
    conj = [perm_mul(ui, perm_mul(x, u)) for x in taus[:i]]
    return perm_mul(ui, perm_mul(c, u)), conj + list(taus[i:])


def epsilon_i(c: Perm, taus: Sequence[Perm], i: int) -> tuple[Perm, list[Perm]]:
    """
    The loop of x_i around 0: the word s_{i-1} ... s_1 e s_1 ... s_{i-1},
    read left to right as successive operations on the tuple.
    """
    state = (c, list(taus))
    for j in range(i - 1, 0, -1):
        state = braid_sigma(*state, j)
    state = braid_epsilon(*state)
    for j in range(1, i):
        state = braid_sigma(*state, j)
    return state


def omega_composite(c: Perm, taus: Sequence[Perm], i: int) -> tuple[Perm, list[Perm]]:
    """The word e_i e_{i-1} ... e_1, read left to right; agrees with block_loop."""
    state = (c, list(taus))
    for j in range(i, 0, -1):
        state = epsilon_i(*state, j)
    return state
