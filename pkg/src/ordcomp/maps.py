"""Piecewise-defined maps between ordinals and their preimage order types.

A map f: domain -> codomain is a finite list of pieces, each covering a
half-open interval of the domain and carrying a kind that fixes f there.
Preimages of interval sets are computed exactly, so order types of
f^-1(K) need no sampling of points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .intervals import IntervalSet, intersect, order_type, sample_subsets
from .ordinal import (
    KAPPA, OMEGA, ONE, ZERO, Exponent, Ordinal, OrdinalError, OrdLike, UnsupportedOrdinal,
    add, as_ordinal, card, cofinality, left_sub, mul, structure,
)

# ---------------------------------------------------------------- helpers


def left_divmod(x: OrdLike, b: OrdLike) -> tuple[Ordinal, Ordinal]:
    """(q, r) with x = b*q + r and r < b."""
    x, b = as_ordinal(x), as_ordinal(b)
    if b.is_zero:
        raise OrdinalError("division by zero")
    eb, cb = b.terms[0]
    eb_ord = eb.to_ordinal()
    q_terms: list[tuple[Exponent, int]] = []
    rest: list[tuple[Exponent, int]] = []
    for e, c in x.terms:
        if e > eb:
            y = Exponent.from_ordinal(left_sub(eb_ord, e.to_ordinal()))
            q_terms.append((y, c))
        else:
            rest.append((e, c))
    r_all = Ordinal(rest)
    n = 0
    if rest and rest[0][0] == eb:
        n = rest[0][1] // cb
        while n and mul(b, n) > r_all:
            n -= 1
    if n:
        q_terms.append((Exponent.pure(ZERO), n))
    q = Ordinal(q_terms)
    r = left_sub(mul(b, q), x)
    if not r < b:
        raise OrdinalError(f"left division of {x} by {b} failed")
    return q, r


def _ot_between(k: IntervalSet, lo: Ordinal, hi: Ordinal) -> Ordinal:
    hi = min(hi, k.bound)
    if not lo < hi:
        return ZERO
    return order_type(intersect(k, IntervalSet([(lo, hi)], k.bound)))


def _count_matching(a: int, c: int | None, parity: int, cap: int | None) -> Ordinal:
    """#{m : a <= 2m + parity < c, m < cap}; None means unbounded."""
    m_lo = max(0, (a - parity + 1) // 2)
    if c is None and cap is None:
        return OMEGA
    m_hi = (c - parity + 1) // 2 if c is not None else cap
    if cap is not None:
        m_hi = min(m_hi, cap)
    return Ordinal.of(max(0, m_hi - m_lo))


# ---------------------------------------------------------------- piece kinds


@dataclass(frozen=True)
class Identity:
    pass


@dataclass(frozen=True)
class Shift:
    offset: Ordinal


@dataclass(frozen=True)
class ConstantTo:
    point: Ordinal


@dataclass(frozen=True)
class SuccessorShiftBelowOmega:
    pass


@dataclass(frozen=True)
class EvenOddInterleave:
    """lo + xi_l + m  ->  base + xi_l + 2m + parity."""
    base: Ordinal
    parity: int


@dataclass(frozen=True)
class BlockCollapse:
    """b*zeta + eta  ->  zeta."""
    size: Ordinal


@dataclass(frozen=True)
class CofinalCollapse:
    """eps -> least eta with eps < gamma_eta, for a canonical cofinal sequence.

    ``mode`` is "mult" (alpha = head + w^(e+1), gamma_eta = head + w^e*(eta+1))
    or "add" (alpha = head + k, gamma_eta = head + eta + 1).
    """
    head: Ordinal
    mode: str
    step: Ordinal = ONE


Kind = Identity | Shift | ConstantTo | SuccessorShiftBelowOmega | EvenOddInterleave | BlockCollapse | CofinalCollapse


@dataclass(frozen=True)
class Piece:
    lo: Ordinal
    hi: Ordinal
    kind: Kind

    @property
    def length(self) -> Ordinal:
        return left_sub(self.lo, self.hi)


@dataclass(frozen=True)
class PieceMap:
    domain: Ordinal
    codomain: Ordinal
    pieces: tuple[Piece, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.pieces:
            if not self.domain.is_zero:
                raise OrdinalError("pieces must cover the domain")
            return
        if self.pieces[0].lo != ZERO or self.pieces[-1].hi != self.domain:
            raise OrdinalError("pieces must partition [0, domain)")
        for p, q in zip(self.pieces, self.pieces[1:]):
            if p.hi != q.lo:
                raise OrdinalError("pieces must be contiguous")
        for p in self.pieces:
            if not p.lo < p.hi:
                raise OrdinalError(f"empty piece at {p.lo}")
            _check_piece(p, self.codomain)

    @property
    def injective(self) -> bool:
        return is_injective(self)

    def __call__(self, e: OrdLike) -> Ordinal:
        return apply(self, e)


def _check_piece(p: Piece, codomain: Ordinal) -> None:
    k = p.kind
    if isinstance(k, SuccessorShiftBelowOmega) and (p.lo != ZERO or p.hi != OMEGA):
        raise OrdinalError("successor shift lives on [0, w)")
    if isinstance(k, (BlockCollapse, CofinalCollapse)) and p.lo != ZERO:
        raise OrdinalError("collapse pieces must start at 0")
    lo, hi = _image_range(p)
    if hi > codomain:
        raise OrdinalError(f"piece [{p.lo}, {p.hi}) maps outside the codomain {codomain}")


def _image_range(p: Piece) -> tuple[Ordinal, Ordinal]:
    k, n = p.kind, p.length
    if isinstance(k, Identity):
        return p.lo, p.hi
    if isinstance(k, Shift):
        return k.offset, add(k.offset, n)
    if isinstance(k, ConstantTo):
        return k.point, add(k.point, ONE)
    if isinstance(k, SuccessorShiftBelowOmega):
        return ONE, OMEGA
    if isinstance(k, EvenOddInterleave):
        s = structure(n)
        extra = 2 * s.nat_tail - 1 + k.parity if s.nat_tail else 0
        return k.base, add(add(k.base, s.limit_part), Ordinal.of(extra))
    if isinstance(k, BlockCollapse):
        q, r = left_divmod(p.hi, k.size)
        return ZERO, add(q, ONE) if not r.is_zero else q
    if isinstance(k, CofinalCollapse):
        return ZERO, OMEGA if k.mode == "mult" else KAPPA
    raise TypeError(k)


def is_injective(f: PieceMap) -> bool:
    ranges = []
    for p in f.pieces:
        k = p.kind
        if isinstance(k, ConstantTo) and p.length != ONE:
            return False
        if isinstance(k, BlockCollapse) and k.size != ONE:
            return False
        if isinstance(k, CofinalCollapse):
            return False
        ranges.append((_image_range(p), k))
    for i, ((a, b), k1) in enumerate(ranges):
        for (c, d), k2 in ranges[i + 1:]:
            if max(a, c) < min(b, d):
                interleaved = (isinstance(k1, EvenOddInterleave) and isinstance(k2, EvenOddInterleave)
                               and k1.base == k2.base and k1.parity != k2.parity)
                if not interleaved:
                    return False
    return True


# ---------------------------------------------------------------- apply / preimage


def _find_piece(f: PieceMap, e: Ordinal) -> Piece:
    for p in f.pieces:
        if p.lo <= e < p.hi:
            return p
    raise OrdinalError(f"{e} is outside the domain {f.domain}")


def apply(f: PieceMap, e: OrdLike) -> Ordinal:
    e = as_ordinal(e)
    p = _find_piece(f, e)
    k = p.kind
    if isinstance(k, Identity):
        return e
    if isinstance(k, Shift):
        return add(k.offset, left_sub(p.lo, e))
    if isinstance(k, ConstantTo):
        return k.point
    if isinstance(k, SuccessorShiftBelowOmega):
        return add(e, ONE)
    if isinstance(k, EvenOddInterleave):
        s = structure(left_sub(p.lo, e))
        return add(add(k.base, s.limit_part), Ordinal.of(2 * s.nat_tail + k.parity))
    if isinstance(k, BlockCollapse):
        return left_divmod(e, k.size)[0]
    if isinstance(k, CofinalCollapse):
        if e < k.head:
            return ZERO
        r = left_sub(k.head, e)
        if k.mode == "add":
            return r
        return left_divmod(r, k.step)[0]
    raise TypeError(k)


def _piece_preimage(p: Piece, k_set: IntervalSet) -> Ordinal:
    k, n = p.kind, p.length
    if isinstance(k, Identity):
        return _ot_between(k_set, p.lo, p.hi)
    if isinstance(k, Shift):
        return _ot_between(k_set, k.offset, add(k.offset, n))
    if isinstance(k, ConstantTo):
        return n if k.point in k_set else ZERO
    if isinstance(k, SuccessorShiftBelowOmega):
        return _ot_between(k_set, ONE, OMEGA)
    if isinstance(k, EvenOddInterleave):
        return _interleave_preimage(k, n, k_set)
    if isinstance(k, BlockCollapse):
        q, r = left_divmod(p.hi, k.size)
        if not r.is_zero:
            raise OrdinalError("block collapse needs a multiple of the block size")
        return mul(k.size, _ot_between(k_set, ZERO, q))
    if isinstance(k, CofinalCollapse):
        if k.mode == "add":
            first = k.head if ZERO in k_set else ZERO
            return add(first, _ot_between(k_set, ZERO, KAPPA))
        rest = _ot_between(k_set, ONE, OMEGA)
        first = add(k.head, k.step) if ZERO in k_set else ZERO
        return add(first, mul(k.step, rest))
    raise TypeError(k)


def _interleave_preimage(k: EvenOddInterleave, n: Ordinal, k_set: IntervalSet) -> Ordinal:
    # Walk K block by block.  Runs of w-blocks lying wholly inside K (and wholly
    # inside the domain) contribute their own order type; anything else is a
    # finite or w-sized count of positions with the right parity.
    s = structure(n)
    full_end = add(k.base, s.limit_part)
    out = ZERO
    for lo, hi in k_set.pieces:
        cur = max(lo, k.base)
        while cur < hi:
            b = structure(cur).limit_part
            if b > full_end or (b == full_end and not s.nat_tail):
                break
            block_end = add(b, OMEGA)
            if cur == b and block_end <= hi and b < full_end:
                end = min(structure(hi).limit_part, full_end)
                out = add(out, left_sub(b, end))
                cur = end
                continue
            seg_end = min(hi, block_end)
            a = left_sub(b, cur).to_int()
            c = None if seg_end == block_end else left_sub(b, seg_end).to_int()
            cap = s.nat_tail if b == full_end else None
            out = add(out, _count_matching(a, c, k.parity, cap))
            cur = seg_end
    return out


def preimage_order_type(f: PieceMap, k_set: IntervalSet) -> Ordinal:
    if k_set.bound != f.codomain:
        raise OrdinalError("K must live inside the codomain")
    out = ZERO
    for p in f.pieces:
        out = add(out, _piece_preimage(p, k_set))
    return out


# ---------------------------------------------------------------- built-in maps


def _pm(domain, codomain, pieces, name) -> PieceMap:
    return PieceMap(as_ordinal(domain), as_ordinal(codomain),
                    tuple(Piece(as_ordinal(a), as_ordinal(b), k) for a, b, k in pieces), name)


def _injection_into_cardinal(alpha: Ordinal, lam: Ordinal, offset: Ordinal = ZERO) -> list:
    """Pieces for an injection alpha -> offset + lam, for lam <= alpha <= lam*2."""
    if alpha == lam:
        return [(ZERO, alpha, Shift(offset))]
    if not lam < alpha <= mul(lam, 2):
        raise UnsupportedOrdinal(f"no built-in injection {alpha} -> {lam}")
    return [(ZERO, lam, EvenOddInterleave(offset, 0)), (lam, alpha, EvenOddInterleave(offset, 1))]


def drop_top(alpha: OrdLike) -> PieceMap:
    """alpha+1 -> alpha: the top point goes to 0, finite points move up by one."""
    alpha = as_ordinal(alpha)
    if alpha.is_finite:
        raise OrdinalError("alpha must be infinite")
    pieces = [(ZERO, OMEGA, SuccessorShiftBelowOmega())]
    if OMEGA < alpha:
        pieces.append((OMEGA, alpha, Identity()))
    pieces.append((alpha, add(alpha, ONE), ConstantTo(ZERO)))
    return _pm(add(alpha, ONE), alpha, pieces, f"drop_top({alpha})")


def interleave(gamma: OrdLike, alpha: OrdLike) -> PieceMap:
    """gamma+alpha+alpha -> gamma+alpha."""
    gamma, alpha = as_ordinal(gamma), as_ordinal(alpha)
    s = structure(alpha)
    a0, n = s.limit_part, s.nat_tail
    cod = add(gamma, alpha)
    dom = add(cod, alpha)
    if a0.is_zero:
        if gamma.is_finite:
            raise OrdinalError("gamma or alpha must be infinite")
        # finite alpha: free n slots at the bottom of w and park the extra points there
        pieces = [(ZERO, OMEGA, Shift(Ordinal.of(n)))]
        if OMEGA < add(gamma, Ordinal.of(n)):
            pieces.append((OMEGA, add(gamma, Ordinal.of(n)), Identity()))
        pieces.append((add(gamma, Ordinal.of(n)), dom, Shift(ZERO)))
        return _pm(dom, cod, pieces, f"interleave({gamma}, {alpha})")
    pieces = []
    if not gamma.is_zero:
        pieces.append((ZERO, gamma, Identity()))
    g1 = add(gamma, a0)
    g2 = add(g1, a0)
    pieces.append((gamma, g1, EvenOddInterleave(gamma, 0)))
    pieces.append((g1, g2, EvenOddInterleave(gamma, 1)))
    if n:
        pieces.append((g2, dom, Shift(g1)))
    return _pm(dom, cod, pieces, f"interleave({gamma}, {alpha})")


def absorb(alpha: OrdLike, delta: OrdLike) -> PieceMap:
    """alpha+delta -> alpha, for delta <= cf(alpha) with delta + alpha = alpha."""
    alpha, delta = as_ordinal(alpha), as_ordinal(delta)
    cf = cofinality(alpha)
    if delta.is_zero or delta > cf or alpha.is_finite:
        raise OrdinalError("need 0 < delta <= cf(alpha) with alpha infinite")
    if add(delta, alpha) != alpha:
        # then delta = cf(alpha) and alpha = cf(alpha)*m: the interleaving map does it
        m, r = left_divmod(alpha, cf)
        if delta != cf or not r.is_zero or not m.is_finite:
            raise OrdinalError(f"no case map for alpha={alpha}, delta={delta}")
        f = interleave(mul(cf, m.to_int() - 1), cf)
        return PieceMap(f.domain, f.codomain, f.pieces, f"absorb({alpha}, {delta})")
    pieces = [(ZERO, alpha, Shift(delta)), (alpha, add(alpha, delta), Shift(ZERO))]
    return _pm(add(alpha, delta), alpha, pieces, f"absorb({alpha}, {delta})")


def card_injection(lam: OrdLike, alpha: OrdLike) -> PieceMap:
    """An injection alpha -> lam for |alpha| = lam."""
    lam, alpha = as_ordinal(lam), as_ordinal(alpha)
    if card(alpha).as_ordinal() != lam:
        raise OrdinalError("need |alpha| = lam")
    return _pm(alpha, lam, _injection_into_cardinal(alpha, lam), f"card_injection({lam}, {alpha})")


def tail_injection(alpha: OrdLike, lam: OrdLike, gamma: OrdLike) -> PieceMap:
    """alpha+gamma -> alpha+lam: identity below alpha, an injection gamma -> lam above."""
    alpha, lam, gamma = as_ordinal(alpha), as_ordinal(lam), as_ordinal(gamma)
    if card(gamma).as_ordinal() != lam:
        raise OrdinalError("need |gamma| = lam")
    pieces = [(ZERO, alpha, Identity())] if not alpha.is_zero else []
    for a, b, k in _injection_into_cardinal(gamma, lam, alpha):
        pieces.append((add(alpha, a), add(alpha, b), k))
    return _pm(add(alpha, gamma), add(alpha, lam), pieces, f"tail_injection({alpha}, {lam}, {gamma})")


def collapse_prefix(beta: OrdLike, alpha: OrdLike) -> PieceMap:
    """beta+alpha -> alpha: everything below beta collapses to 0."""
    beta, alpha = as_ordinal(beta), as_ordinal(alpha)
    pieces = [(ZERO, beta, ConstantTo(ZERO)), (beta, add(beta, alpha), Shift(ZERO))]
    return _pm(add(beta, alpha), alpha, pieces, f"collapse_prefix({beta}, {alpha})")


def collapse_blocks(beta: OrdLike, alpha: OrdLike) -> PieceMap:
    """beta*alpha -> alpha, beta*zeta + eta -> zeta."""
    beta, alpha = as_ordinal(beta), as_ordinal(alpha)
    return _pm(mul(beta, alpha), alpha, [(ZERO, mul(beta, alpha), BlockCollapse(beta))],
               f"collapse_blocks({beta}, {alpha})")


def cofinal_kind(alpha: OrdLike) -> CofinalCollapse:
    alpha = as_ordinal(alpha)
    cf = cofinality(alpha)
    *head, (e, c) = alpha.terms
    head_ord = Ordinal(head + ([(e, c - 1)] if c > 1 else []))
    if cf == OMEGA and e.is_successor:
        e0 = Exponent(e.kp, e.ke, _pred(e.tail))
        return CofinalCollapse(head_ord, "mult", Ordinal.omega_power(e0))
    if cf == KAPPA and e == Exponent(0, ONE, ZERO):
        return CofinalCollapse(head_ord, "add")
    raise UnsupportedOrdinal(f"no canonical cofinal sequence for {alpha}")


def _pred(x: Ordinal) -> Ordinal:
    *head, (e, c) = x.terms
    return Ordinal(head + ([(e, c - 1)] if c > 1 else []))


def collapse_cofinal(alpha: OrdLike) -> PieceMap:
    """alpha -> cf(alpha), collapsing the blocks of a cofinal sequence."""
    alpha = as_ordinal(alpha)
    kind = cofinal_kind(alpha)
    return _pm(alpha, cofinality(alpha), [(ZERO, alpha, kind)], f"collapse_cofinal({alpha})")


# ---------------------------------------------------------------- verification


@dataclass
class TransferCheck:
    passed: bool
    checked: int
    counterexample: IntervalSet | None = None
    exact: bool = True
    sampled: bool = True

    def __bool__(self) -> bool:
        return self.passed


def _anchors(x: Ordinal) -> list[Ordinal]:
    out = {ZERO, ONE, Ordinal.of(2), OMEGA, add(OMEGA, ONE)}
    acc = ZERO
    for e, c in x.terms:
        for j in range(1, c + 1):
            y = add(acc, Ordinal([(e, j)]))
            out.update({y, add(y, ONE), add(y, Ordinal.of(2))})
        acc = add(acc, Ordinal([(e, c)]))
        out.add(acc)
    return sorted(y for y in out if y < x)


def adversarial_sets(f: PieceMap, extra: Iterable[Ordinal] = ()) -> list[IntervalSet]:
    """Hand-built K: initial and final segments, single points and piece images."""
    cod = f.codomain
    pts = set(_anchors(cod))
    for x in extra:
        pts.update(y for y in _anchors(x) if y < cod)
    for p in f.pieces:
        lo, hi = _image_range(p)
        if lo < cod:
            pts.add(lo)
    out = []
    for x in sorted(pts):
        out.append(IntervalSet([(ZERO, x)], cod))
        out.append(IntervalSet([(x, cod)], cod))
        out.append(IntervalSet.points([x], cod))
        out.append(IntervalSet([(ZERO, x), (add(x, ONE), cod)], cod))
    for p in f.pieces:
        lo, hi = _image_range(p)
        out.append(IntervalSet([(lo, min(hi, cod))], cod))
    return out


def _sample_family(cod: Ordinal, beta: Ordinal, n: int, seed: int) -> list[IntervalSet]:
    # Random subsets of the whole codomain mostly have large order type, so
    # also draw subsets of initial segments shorter than beta.
    out = sample_subsets(IntervalSet.full(cod), n, seed)
    tops = [x for x in _anchors(min(beta, cod)) if not x.is_zero] or [ONE]
    per = max(1, n // len(tops) + 1)
    for i, x in enumerate(tops):
        out += sample_subsets(IntervalSet([(ZERO, x)], cod), per, seed + 1 + i)
    return out


def check_transfer(f: PieceMap, beta: OrdLike, beta2: OrdLike, samples: int | Sequence[IntervalSet] = 100,
                   seed: int = 0) -> TransferCheck:
    """Test: ot(K) < beta implies ot(f^-1(K)) < beta2, on a family of K."""
    beta, beta2 = as_ordinal(beta), as_ordinal(beta2)
    if isinstance(samples, int):
        family = _sample_family(f.codomain, beta, samples, seed)
    else:
        family = list(samples)
    family += adversarial_sets(f, [beta])
    checked = 0
    for k in family:
        if not order_type(k) < beta:
            continue
        checked += 1
        if not preimage_order_type(f, k) < beta2:
            return TransferCheck(False, checked, k)
    return TransferCheck(True, checked)


FAMILIES = tuple(f.__name__ for f in (drop_top, interleave, absorb, card_injection, tail_injection,
                                       collapse_prefix, collapse_blocks, collapse_cofinal))
INJECTIVE_FAMILIES = FAMILIES[:5]

SAMPLE_ORDINALS = ("w", "w*2", "w^2", "k", "k+w", "k*2")


def builtin_instances(values: Sequence[str] = SAMPLE_ORDINALS) -> list[tuple[str, PieceMap, Ordinal, Ordinal]]:
    """(family, f, beta, beta') for every type-correct instantiation of the
    built-in maps over ``values``; f must pass check_transfer(f, beta, beta')."""
    vals = [as_ordinal(v) for v in values]
    out: list[tuple[str, PieceMap, Ordinal, Ordinal]] = []
    for a in vals:
        out.append(("drop_top", drop_top(a), a, add(a, ONE)))
    for g in vals:
        for a in vals:
            ga = add(g, a)
            out.append(("interleave", interleave(g, a), ga, add(ga, a)))
    for a in vals:
        for d in [ONE, Ordinal.of(2)] + vals:
            if d <= cofinality(a):
                try:
                    out.append(("absorb", absorb(a, d), a, add(a, d)))
                except OrdinalError:
                    pass
    for lam in (OMEGA, KAPPA):
        for a in vals:
            if card(a).as_ordinal() == lam and a <= mul(lam, 2):
                out.append(("card_injection", card_injection(lam, a), lam, a))
    for a0 in vals:
        if cofinality(a0) > OMEGA:
            for g in vals:
                if card(g).as_ordinal() == OMEGA and g <= mul(OMEGA, 2):
                    out.append(("tail_injection", tail_injection(a0, OMEGA, g), add(a0, OMEGA), add(a0, g)))
    for b in vals:
        for a in vals:
            out.append(("collapse_prefix", collapse_prefix(b, a), a, add(b, a)))
    for b in vals:
        for a in vals:
            out.append(("collapse_blocks", collapse_blocks(b, a), a, mul(b, a)))
    for a in vals:
        out.append(("collapse_cofinal", collapse_cofinal(a), cofinality(a), a))
    return out
