"""Finite unions of half-open ordinal intervals."""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .ordinal import (
    Exponent, Ordinal, OrdinalError, OrdLike, ONE, ZERO, add, as_ordinal, left_sub,
)
from .sums import delta, k_decomposition, shifted_certificate

Piece = tuple[Ordinal, Ordinal]


class IntervalSet:
    """Sorted, disjoint, non-adjacent pieces [lo, hi) below ``bound``."""

    __slots__ = ("pieces", "bound")

    def __init__(self, pieces: Iterable[tuple[OrdLike, OrdLike]], bound: OrdLike):
        self.bound = as_ordinal(bound)
        raw = sorted(((as_ordinal(lo), as_ordinal(hi)) for lo, hi in pieces), key=lambda p: p[0].key)
        merged: list[Piece] = []
        for lo, hi in raw:
            if hi > self.bound:
                raise OrdinalError(f"piece [{lo}, {hi}) exceeds bound {self.bound}")
            if not lo < hi:
                continue
            if merged and lo <= merged[-1][1]:
                if hi > merged[-1][1]:
                    merged[-1] = (merged[-1][0], hi)
            else:
                merged.append((lo, hi))
        self.pieces: tuple[Piece, ...] = tuple(merged)

    @staticmethod
    def full(bound: OrdLike) -> "IntervalSet":
        return IntervalSet([(ZERO, bound)], bound)

    @staticmethod
    def empty(bound: OrdLike) -> "IntervalSet":
        return IntervalSet([], bound)

    @staticmethod
    def points(xs: Iterable[OrdLike], bound: OrdLike) -> "IntervalSet":
        return IntervalSet([(x, add(x, ONE)) for x in xs], bound)

    def __bool__(self) -> bool:
        return bool(self.pieces)

    def __iter__(self):
        return iter(self.pieces)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntervalSet) and (self.pieces, self.bound) == (other.pieces, other.bound)

    def __hash__(self) -> int:
        return hash((self.pieces, self.bound))

    def __contains__(self, x: OrdLike) -> bool:
        x = as_ordinal(x)
        return any(lo <= x < hi for lo, hi in self.pieces)

    def __repr__(self) -> str:
        body = " u ".join(f"[{lo}, {hi})" for lo, hi in self.pieces) or "{}"
        return f"IntervalSet({body}; bound {self.bound})"

    def to_json(self) -> list[list[str]]:
        return [[str(lo), str(hi)] for lo, hi in self.pieces]

    @staticmethod
    def from_json(data: Sequence[Sequence[str]], bound: OrdLike) -> "IntervalSet":
        return IntervalSet([(lo, hi) for lo, hi in data], bound)

    def order_type(self) -> Ordinal:
        return order_type(self)

    def is_subset(self, other: "IntervalSet") -> bool:
        return not intersect(self, complement(other))


def order_type(s: IntervalSet) -> Ordinal:
    out = ZERO
    for lo, hi in s.pieces:
        out = add(out, left_sub(lo, hi))
    return out


def _same_bound(s: IntervalSet, t: IntervalSet) -> None:
    if s.bound != t.bound:
        raise OrdinalError(f"bound mismatch: {s.bound} vs {t.bound}")


def union(s: IntervalSet, t: IntervalSet) -> IntervalSet:
    _same_bound(s, t)
    return IntervalSet(s.pieces + t.pieces, s.bound)


def intersect(s: IntervalSet, t: IntervalSet) -> IntervalSet:
    _same_bound(s, t)
    out, i, j = [], 0, 0
    while i < len(s.pieces) and j < len(t.pieces):
        (a, b), (c, d) = s.pieces[i], t.pieces[j]
        lo, hi = max(a, c), min(b, d)
        if lo < hi:
            out.append((lo, hi))
        if b <= d:
            i += 1
        else:
            j += 1
    return IntervalSet(out, s.bound)


def complement(s: IntervalSet) -> IntervalSet:
    out, cur = [], ZERO
    for lo, hi in s.pieces:
        out.append((cur, lo))
        cur = hi
    out.append((cur, s.bound))
    return IntervalSet(out, s.bound)


def realize_shifted_sum(g: OrdLike, a: OrdLike, b: OrdLike) -> tuple[IntervalSet, IntervalSet]:
    """Sets I, J with I u J = [0, g) of order types a and b, each a union of
    initial segments of the blocks of ``k_decomposition(g)``."""
    g, a, b = as_ordinal(g), as_ordinal(a), as_ordinal(b)
    cert = shifted_certificate(g, a, b)
    if cert is None:
        raise OrdinalError(f"{g} is not a shifted sum of {a} and {b}")
    left, right = [], []
    for (lo, _), block in zip(k_decomposition(g), cert):
        left.append((lo, add(lo, delta(block.left))))
        right.append((lo, add(lo, delta(block.right))))
    return IntervalSet(left, g), IntervalSet(right, g)


# ---------------------------------------------------------------- sampling

def _random_exponent_below(e: Exponent, rng: random.Random, depth: int) -> Exponent:
    if e.is_zero:
        raise OrdinalError("no exponent below 0")
    if e.kp:
        ke = Ordinal.of(rng.randint(0, 3))
        return Exponent(0, ke, random_below(Ordinal.of(4), rng, depth - 1) if depth > 0 else ZERO)
    if depth <= 0 or rng.random() < 0.3:
        return Exponent.pure(ZERO)
    return Exponent.from_ordinal(random_below(e.to_ordinal(), rng, depth - 1))


def random_below(d: OrdLike, rng: random.Random, depth: int = 2) -> Ordinal:
    """A pseudo-random ordinal x < d, biased towards structurally varied values."""
    d = as_ordinal(d)
    if d.is_zero:
        raise OrdinalError("nothing below 0")
    i = rng.randrange(len(d.terms))
    e, c = d.terms[i]
    head = list(d.terms[:i])
    c2 = rng.randrange(c)
    if c2:
        head.append((e, c2))
    x = Ordinal(head)
    if e.is_zero:
        return x
    for _ in range(rng.randint(0, 2)):
        f = _random_exponent_below(e, rng, depth)
        x = add(x, Ordinal.omega_power(f, rng.randint(1, 3)))
    return x


def _random_subset(s: IntervalSet, rng: random.Random) -> IntervalSet:
    out = []
    for lo, hi in s.pieces:
        mode = rng.random()
        if mode < 0.15:
            continue
        if mode < 0.3:
            out.append((lo, hi))
            continue
        cuts = sorted({add(lo, random_below(left_sub(lo, hi), rng)) for _ in range(rng.randint(1, 4))},
                      key=lambda x: x.key)
        pts = [lo] + [x for x in cuts if x > lo] + [hi]
        keep = rng.random() < 0.5
        for x, y in zip(pts, pts[1:]):
            if keep:
                out.append((x, y))
            keep = not keep
    return IntervalSet(out, s.bound)


def sample_subsets(s: IntervalSet, n: int, seed: int) -> list[IntervalSet]:
    """n pseudo-random subsets of s; s itself and the empty set always come first."""
    rng = random.Random(seed)
    out = [s, IntervalSet.empty(s.bound)]
    while len(out) < n:
        out.append(_random_subset(s, rng))
    return out[:n]
