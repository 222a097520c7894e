"""Shifted sums, mixed sums and the +* operation via exponent strings.

An ordinal g = w^h_1 + ... + w^h_n (exponents non-increasing, coefficients
expanded) has the string sigma(g) = (h_1, ..., h_n).  A shifted sum of a and b
is an ordinal covered by two subsets of order types a and b; mixed sums
require the subsets to be disjoint.  Both are decided by cutting sigma(a) and
sigma(b) into consecutive blocks, one pair of blocks per item of sigma(g).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple

from .ordinal import (
    Exponent, Ordinal, OrdinalError, OrdLike, ZERO, add, as_ordinal, natural_sum, structure,
)

Sigma = tuple[Exponent, ...]


class Block(NamedTuple):
    """One position of a block decomposition: the item of sigma(g) and the two blocks."""

    eta: Exponent
    left: Sigma
    right: Sigma


def sigma(g: OrdLike) -> Sigma:
    g = as_ordinal(g)
    return tuple(e for e, c in g.terms for _ in range(c))


def delta(s: Iterable[Exponent]) -> Ordinal:
    out = ZERO
    for e in s:
        out = add(out, Ordinal.omega_power(e))
    return out


def reduce(s: Iterable[Exponent]) -> Sigma:
    """Drop every item that is followed later by a strictly larger one."""
    kept: list[Exponent] = []
    for e in s:
        while kept and kept[-1] < e:
            kept.pop()
        kept.append(e)
    return tuple(kept)


def _nonzero(*xs: OrdLike) -> list[Ordinal]:
    out = [as_ordinal(x) for x in xs]
    if any(x.is_zero for x in out):
        raise OrdinalError("sums are only defined for nonzero ordinals")
    return out


def _block_options(s: Sigma, i: int, eta: Exponent) -> list[tuple[int, bool]]:
    """Ways to cut the next block off s[i:] under item eta: (length, is_exact)."""
    opts = [(0, False)]
    if i < len(s):
        if s[i] == eta:
            opts.append((1, True))
        elif s[i] < eta:
            opts.extend((k, False) for k in range(1, len(s) - i + 1))
    return opts


def _pairs(a: Sigma, b: Sigma, i: int, j: int, eta: Exponent, mixed: bool):
    for la, ea in _block_options(a, i, eta):
        for lb, eb in _block_options(b, j, eta):
            if not (ea or eb):
                continue
            if mixed and eta.is_zero and la and lb:
                continue
            yield la, lb


@lru_cache(maxsize=None)
def _enumerate(a: Sigma, b: Sigma, mixed: bool) -> frozenset[Sigma]:
    @lru_cache(maxsize=None)
    def go(i: int, j: int, prev: Exponent | None) -> frozenset[Sigma]:
        if i == len(a) and j == len(b):
            return frozenset({()})
        out: set[Sigma] = set()
        heads = {s[k] for s, k in ((a, i), (b, j)) if k < len(s)}
        for eta in heads:
            if prev is not None and eta > prev:
                continue
            for la, lb in _pairs(a, b, i, j, eta, mixed):
                for rest in go(i + la, j + lb, eta):
                    out.add((eta,) + rest)
        return frozenset(out)

    return go(0, 0, None)


def shifted_sums(a: OrdLike, b: OrdLike) -> list[Ordinal]:
    """All shifted sums of a and b, ascending."""
    a, b = _nonzero(a, b)
    return sorted(delta(s) for s in _enumerate(sigma(a), sigma(b), False))


def mixed_sums(a: OrdLike, b: OrdLike) -> list[Ordinal]:
    a, b = _nonzero(a, b)
    return sorted(delta(s) for s in _enumerate(sigma(a), sigma(b), True))


def _certificate(g: Ordinal, a: Ordinal, b: Ordinal, mixed: bool) -> list[Block] | None:
    target, sa, sb = sigma(g), sigma(a), sigma(b)
    dead: set[tuple[int, int, int]] = set()

    def go(k: int, i: int, j: int) -> list[Block] | None:
        if k == len(target):
            return [] if i == len(sa) and j == len(sb) else None
        if (k, i, j) in dead:
            return None
        eta = target[k]
        for la, lb in _pairs(sa, sb, i, j, eta, mixed):
            rest = go(k + 1, i + la, j + lb)
            if rest is not None:
                return [Block(eta, sa[i:i + la], sb[j:j + lb])] + rest
        dead.add((k, i, j))
        return None

    return go(0, 0, 0)


def shifted_certificate(g: OrdLike, a: OrdLike, b: OrdLike) -> list[Block] | None:
    """Block decomposition witnessing that g is a shifted sum of a and b, or None."""
    return _certificate(*_nonzero(g, a, b), mixed=False)


def is_shifted_sum(g: OrdLike, a: OrdLike, b: OrdLike) -> bool:
    return shifted_certificate(g, a, b) is not None


def mixed_certificate(g: OrdLike, a: OrdLike, b: OrdLike) -> list[Block] | None:
    return _certificate(*_nonzero(g, a, b), mixed=True)


def is_mixed_sum(g: OrdLike, a: OrdLike, b: OrdLike) -> bool:
    return mixed_certificate(g, a, b) is not None


def min_mixed_sum(a: OrdLike, b: OrdLike) -> Ordinal:
    a, b = _nonzero(a, b)
    sa, sb = structure(a), structure(b)
    if sa.limit_part == sb.limit_part:
        return add(sa.limit_part, Ordinal.of(sa.nat_tail + sb.nat_tail))
    return max(a, b)


# ---------------------------------------------------------------- +*

def _decrement_last(x: Ordinal) -> Ordinal:
    *head, (e, c) = x.terms
    return Ordinal(head + ([(e, c - 1)] if c > 1 else []))


def _truncate(x: Ordinal, e: Exponent) -> Ordinal:
    return Ordinal(t for t in x.terms if t[0] >= e)


def nsup(a: OrdLike, d: OrdLike) -> Ordinal:
    """sup of a' (+) d over a' < a.  Attained when a is a successor."""
    a, d = as_ordinal(a), as_ordinal(d)
    if a.is_zero:
        raise OrdinalError("empty supremum")
    base = natural_sum(_decrement_last(a), d)
    e = a.last_exponent
    if e.is_zero:
        return base
    return add(_truncate(base, e), Ordinal.omega_power(e))


def star_sum(a: OrdLike, b: OrdLike) -> Ordinal:
    """Least ordinal above every shifted sum of a' < a and b' < b."""
    a, b = _nonzero(a, b)
    m = max(a.last_exponent, b.last_exponent)
    base = natural_sum(_decrement_last(a), _decrement_last(b))
    return add(_truncate(base, m), Ordinal.omega_power(m))


def k_decomposition(g: OrdLike) -> list[tuple[Ordinal, Ordinal]]:
    """The intervals [g_{i+1}, g_i) cut out by the partial sums of sigma(g), ascending."""
    (g,) = _nonzero(g)
    out, lo = [], ZERO
    for e in sigma(g):
        hi = add(lo, Ordinal.omega_power(e))
        out.append((lo, hi))
        lo = hi
    return out
