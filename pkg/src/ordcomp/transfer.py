"""Rule engine for implications between ordinal compactness properties.

A query asks whether every space of a given class that is compact on a
source interval of ordinals is also compact on a target interval.  A
property [b, a]-compactness is the same as [g, g]-compactness for every g
in the interval, so the engine tracks the set D of ordinals g for which
[g, g]-compactness is known to follow.  D starts as the source interval
and is closed under the transfer rules below; the answer is Implied when D
covers the target.

Upper ends of spans are ordinals or one of two markers: TOP sits just
above every representable ordinal (the representable part of an interval
ending at k++), INF is a genuine "and every larger ordinal".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union

from .ordinal import (
    ALEPH0, KAPPA, KAPPA_CARD, KAPPA_PLUS, OMEGA, ONE, ZERO, CardClass, Exponent, Ordinal,
    OrdinalError, OrdLike, UnsupportedOrdinal, add, as_ordinal, cofinality, left_sub, mul,
    parse, star, star_lambda, star_star, structure,
)

TOP = "top"
INF = "inf"
Bound = Union[Ordinal, str]

_K_EXP = Exponent(0, ONE, ZERO)


def _bkey(h: Bound) -> tuple:
    if isinstance(h, Ordinal):
        return (0, h.key)
    return (1,) if h == TOP else (2,)


def _blt(a: Bound, b: Bound) -> bool:
    return _bkey(a) < _bkey(b)


def _bmin(a: Bound, b: Bound) -> Bound:
    return a if _bkey(a) <= _bkey(b) else b


def _bmax(a: Bound, b: Bound) -> Bound:
    return a if _bkey(a) >= _bkey(b) else b


def _add_safe(a: Ordinal, b: Ordinal) -> Bound:
    try:
        return add(a, b)
    except UnsupportedOrdinal:
        return TOP


# ---------------------------------------------------------------- queries


@dataclass(frozen=True)
class Interval:
    """[lo, hi] when closed, [lo, hi) otherwise; hi=None means [lo, infinity)."""

    lo: Ordinal
    hi: Ordinal | None
    closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "lo", as_ordinal(self.lo))
        if self.hi is not None:
            object.__setattr__(self, "hi", as_ordinal(self.hi))
        if self.hi is None and self.closed:
            object.__setattr__(self, "closed", False)
        if self.lo.is_zero:
            raise OrdinalError("interval endpoints must be nonzero")
        if self.hi is not None:
            if self.closed and self.hi < self.lo:
                raise OrdinalError(f"malformed interval: {self.lo} > {self.hi}")
            if not self.closed and not self.lo < self.hi:
                raise OrdinalError(f"malformed interval: [{self.lo}, {self.hi}) is empty")

    @staticmethod
    def point(x: OrdLike) -> "Interval":
        return Interval(as_ordinal(x), as_ordinal(x), True)

    @staticmethod
    def parse(text: str) -> "Interval":
        """'[b,a]', '[b,a)', '[b,inf)' or '[g]' for a single point."""
        t = text.strip()
        if not t.startswith("[") or t[-1] not in "])":
            raise OrdinalError(f"bad interval {text!r}")
        body, closed = t[1:-1], t[-1] == "]"
        if "," not in body:
            if not closed:
                raise OrdinalError(f"bad interval {text!r}")
            return Interval.point(parse(body))
        lo, hi = body.split(",", 1)
        if hi.strip() in ("inf", "oo", "∞"):
            return Interval(parse(lo), None, False)
        return Interval(parse(lo), parse(hi), closed)

    @property
    def end(self) -> Bound:
        """Exclusive upper end."""
        if self.hi is None:
            return INF
        return add(self.hi, ONE) if self.closed else self.hi

    def __str__(self) -> str:
        if self.hi is None:
            return f"[{self.lo}, inf)"
        return f"[{self.lo}, {self.hi}{']' if self.closed else ')'}"

    def to_json(self) -> dict:
        return {"lo": str(self.lo), "hi": None if self.hi is None else str(self.hi), "closed": self.closed}


@dataclass(frozen=True)
class SpaceClass:
    """arbitrary | union_closed | t1 | lambda_t1 | card_bound | card_bound_union_closed.

    ``card`` is the cardinal parameter (lambda for lambda_t1, the bound for
    card_bound*); card_bound means |X| <= card.
    """

    kind: str
    card: CardClass | None = None

    KINDS = ("arbitrary", "union_closed", "t1", "lambda_t1", "card_bound", "card_bound_union_closed")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown class {self.kind!r}")
        if self.kind in ("lambda_t1", "card_bound", "card_bound_union_closed"):
            if self.card not in (ALEPH0, KAPPA_CARD):
                raise ValueError(f"{self.kind} needs a cardinal in {{w, k}}")

    @property
    def union_closed(self) -> bool:
        return self.kind in ("union_closed", "card_bound_union_closed")

    @property
    def t1(self) -> bool:
        return self.kind in ("t1", "lambda_t1")

    @property
    def kappa_t1(self) -> bool:
        return self.kind == "lambda_t1" and self.card == KAPPA_CARD

    @property
    def card_bound(self) -> CardClass | None:
        return self.card if self.kind.startswith("card_bound") else None

    def admits(self, profile) -> bool:
        """Whether a space with this ClassProfile belongs to the class."""
        if self.union_closed and not profile.union_closed:
            return False
        if self.t1 and not profile.t1:
            return False
        if self.kappa_t1 and not profile.kappa_t1:
            return False
        c = self.card_bound
        if c is not None and (profile.card is None or profile.card > c):
            return False
        return True

    @staticmethod
    def parse(text: str) -> "SpaceClass":
        name, _, arg = text.strip().lower().replace("-", "_").partition(":")
        card = {"": None, "w": ALEPH0, "omega": ALEPH0, "k": KAPPA_CARD, "kappa": KAPPA_CARD}.get(arg)
        if arg and card is None:
            raise ValueError(f"unknown cardinal {arg!r}")
        if name == "lambda_t1" and card is None:
            card = ALEPH0
        if name == "card_bound_union_closed" and card is None:
            card = KAPPA_CARD
        return SpaceClass(name, card)

    def __str__(self) -> str:
        return self.kind + (f":{self.card}" if self.card is not None else "")


ARBITRARY = SpaceClass("arbitrary")
UNION_CLOSED = SpaceClass("union_closed")
T1 = SpaceClass("t1")


def lambda_t1(lam: CardClass) -> SpaceClass:
    return SpaceClass("lambda_t1", lam)


def card_bound(c: CardClass, union_closed: bool = False) -> SpaceClass:
    return SpaceClass("card_bound_union_closed" if union_closed else "card_bound", c)


@dataclass(frozen=True)
class ImplicationQuery:
    src: Interval
    dst: Interval
    cls: SpaceClass = ARBITRARY

    def __str__(self) -> str:
        return f"{self.src} => {self.dst} ({self.cls})"


@dataclass(frozen=True)
class Verdict:
    status: str  # implied | not_implied | unknown
    rules: tuple[str, ...] = ()
    witness: object = None

    @property
    def implied(self) -> bool:
        return self.status == "implied"

    @property
    def not_implied(self) -> bool:
        return self.status == "not_implied"

    def to_json(self) -> dict:
        w = self.witness.to_json() if self.witness is not None else None
        return {"verdict": self.status, "rules": list(self.rules), "witness": w}


UNKNOWN = Verdict("unknown")


# ---------------------------------------------------------------- ordinal helpers


def _terms_prefix(x: Ordinal, i: int, c: int) -> Ordinal:
    """The first i terms of x followed by term i with coefficient c."""
    head = list(x.terms[:i])
    if c:
        head.append((x.terms[i][0], c))
    return Ordinal(head)


def right_tails(x: Ordinal) -> list[tuple[Ordinal, Ordinal]]:
    """All (prefix, tail) with prefix + tail = x and tail nonzero."""
    out = []
    for i, (e, c) in enumerate(x.terms):
        rest = Ordinal(x.terms[i + 1:])
        for j in range(c):
            prefix = _terms_prefix(x, i, j)
            tail = Ordinal([(e, c - j)] + list(rest.terms))
            out.append((prefix, tail))
    return out


def prefixes(x: Ordinal) -> list[Ordinal]:
    return [p for p, _ in right_tails(x)] + [x]


def _pred_last(x: Ordinal) -> Ordinal:
    *head, (e, c) = x.terms
    return Ordinal(head + ([(e, c - 1)] if c > 1 else []))


def _tops(lo: Ordinal, hi: Bound) -> list[Ordinal]:
    """Points of [lo, hi) worth using as the right end of a known span."""
    if not isinstance(hi, Ordinal):
        return []
    out = []
    if hi.is_successor:
        a = _pred_last(hi)
        out.append(a)
        if not a.is_finite:
            out.append(structure(a).limit_part)
    else:
        head = _pred_last(hi)
        if not head.is_zero:
            out.append(head)
        e = hi.last_exponent
        if e.is_successor:
            e0 = Exponent(e.kp, e.ke, _pred_last(e.tail))
            for k in (1, 2):
                out.append(add(head, Ordinal.omega_power(e0, k)))
    return sorted({a for a in out if lo <= a and a < hi}, key=lambda a: a.key)


def _successor_cardinal(lam: Ordinal) -> Bound:
    # w_1 is not representable; below it sit exactly the pure ordinals, so the
    # representable part of [x, w_1) is [x, k).
    if lam == OMEGA:
        return KAPPA
    if lam == KAPPA:
        return KAPPA_PLUS
    return TOP


def _is_kappa_multiple(t: Ordinal) -> bool:
    return KAPPA <= t < KAPPA_PLUS and t == star(t)


def _card_bound_base(t: Ordinal) -> Ordinal | None:
    """alpha with t in [alpha, alpha + k*w) and alpha = a1 + k^e, e >= 2 a successor."""
    high = Ordinal(tm for tm in t.terms if tm[0] > _K_EXP)
    if high.is_zero:
        return None
    e = high.last_exponent
    if e.kp or e.tail.terms or not e.ke.is_successor or e.ke <= ONE:
        return None
    return high


def _omega_bases(x: Ordinal) -> list[Ordinal]:
    """b <= x with cf(b) = w and x = b + (countable)."""
    return [b for b in prefixes(x) if not b.is_zero and cofinality(b) == OMEGA
            and left_sub(b, x).is_pure and b >= star(x)]


def _lambda_bases(x: Ordinal) -> list[Ordinal]:
    """Limits b <= x with x = b + (something of size <= k), where either cf(b) = k
    or b is a limit of ordinals of cofinality k+ and cf(b) = w.

    Bases of countable cofinality below k are excluded: the discrete countable
    space is k-T1, not [w, w]-compact, yet [k, k]-compact.
    """
    floor = star_lambda(x, KAPPA_CARD)
    out = []
    for b in prefixes(x):
        if not b.is_limit or b < floor:
            continue
        cf = cofinality(b)
        if cf == KAPPA or cf == OMEGA and b == floor:
            out.append(b)
    return out


def _right_divisors(x: Ordinal, g: Ordinal) -> Ordinal | None:
    """Some b with b*g = x, if one is easy to find."""
    cands = []
    if g.is_finite:
        n = g.to_int()
        e, c = x.terms[0]
        if c % n == 0:
            cands.append(Ordinal([(e, c // n)] + list(x.terms[1:])))
    else:
        y = g.terms[0][0].to_ordinal()
        big = x.terms[0][0].to_ordinal()
        for p in prefixes(big):
            try:
                if left_sub(p, big) == y:
                    cands.append(Ordinal.omega_power(Exponent.from_ordinal(p)))
            except (OrdinalError, UnsupportedOrdinal):
                pass
    for b in cands:
        try:
            if mul(b, g) == x:
                return b
        except UnsupportedOrdinal:
            pass
    return None


# ---------------------------------------------------------------- the derived set


@dataclass
class _Span:
    lo: Ordinal
    hi: Bound
    trace: tuple[str, ...]


def _join(*traces: tuple[str, ...]) -> tuple[str, ...]:
    out: list[str] = []
    for t in traces:
        for r in t:
            if r not in out:
                out.append(r)
    return tuple(out)


class Derivation:
    """The set D of points g with [g, g]-compactness established, as spans."""

    ROUNDS = 40

    def __init__(self, cls: SpaceClass):
        self.cls = cls
        self.spans: list[_Span] = []
        self._merged: list[_Span] | None = None
        self.kappa_trigger: tuple[str, ...] | None = None
        self.omega_trigger: tuple[str, ...] | None = None

    # -- set operations

    def merged(self) -> list[_Span]:
        if self._merged is None:
            out: list[_Span] = []
            for s in sorted(self.spans, key=lambda s: s.lo.key):
                if out and not _blt(out[-1].hi, s.lo):
                    last = out[-1]
                    if _blt(last.hi, s.hi):
                        out[-1] = _Span(last.lo, s.hi, _join(last.trace, s.trace))
                    continue
                out.append(_Span(s.lo, s.hi, s.trace))
            self._merged = out
        return self._merged

    def covers(self, lo: Ordinal, hi: Bound) -> tuple[str, ...] | None:
        for s in self.merged():
            if s.lo <= lo and _blt(lo, s.hi):
                return s.trace if not _blt(s.hi, hi) else None
        return None

    def best_cover(self, lo: Ordinal, hi: Bound) -> tuple[str, ...] | None:
        """Trace of a single derived span covering [lo, hi), shortest first; else the merged trace."""
        single = [s.trace for s in self.spans if s.lo <= lo and not _blt(s.hi, hi)]
        if single:
            return min(single, key=len)
        return self.covers(lo, hi)

    def contains(self, x: Ordinal) -> tuple[str, ...] | None:
        return self.covers(x, add(x, ONE))

    def meets(self, lo: Ordinal, hi: Bound) -> tuple[Ordinal, tuple[str, ...]] | None:
        for s in self.merged():
            start = max(lo, s.lo)
            if _blt(start, _bmin(hi, s.hi)):
                return start, s.trace
        return None

    def first_gap(self, lo: Ordinal, hi: Bound) -> Ordinal | None:
        cur = lo
        for s in self.merged():
            if _blt(cur, s.lo):
                break
            if _blt(cur, s.hi):
                if not isinstance(s.hi, Ordinal):
                    return None
                cur = s.hi
        return cur if _blt(cur, hi) else None

    def add(self, lo: Ordinal, hi: Bound, trace: tuple[str, ...]) -> bool:
        if not _blt(lo, hi) or self.covers(lo, hi) is not None:
            return False
        self.spans.append(_Span(lo, hi, trace))
        self._merged = None
        return True

    # -- forward closure

    def saturate(self) -> None:
        for _ in range(self.ROUNDS):
            grew = False
            for s in list(self.merged()):
                for lo, hi, rule in self._forward(s):
                    grew |= self.add(lo, hi, _join(s.trace, (rule,)))
            grew |= self._triggers()
            if not grew:
                return

    def _forward(self, s: _Span) -> Iterator[tuple[Ordinal, Bound, str]]:
        lo, hi = s.lo, s.hi
        if not isinstance(hi, Ordinal) and hi == INF:
            return
        tops = _tops(lo, hi)
        # one step up from an infinite point, then w steps
        if isinstance(hi, Ordinal) and hi.is_successor and not _pred_last(hi).is_finite:
            yield lo, add(structure(_pred_last(hi)).limit_part, OMEGA), "successor-step"
        for a in tops:
            if a.is_finite:
                continue
            cf = cofinality(a)
            if cf == ONE:
                continue
            yield lo, (TOP if cf == KAPPA_PLUS else add(a, mul(cf, OMEGA))), "cofinal-extension"
        for lam in (OMEGA, KAPPA, KAPPA_PLUS):
            if lo <= lam and _blt(lam, hi):
                yield lo, _successor_cardinal(lam), "cardinal-successor"
        for t in tops + [lo]:
            a0 = star(t)
            if not a0.is_zero:
                top = add(a0, OMEGA)
                if lo <= top and _blt(top, hi):
                    yield lo, add(a0, KAPPA), "cardinal-successor-shift"
            a1 = star_lambda(t, KAPPA_CARD)
            if not a1.is_zero:
                top = add(a1, KAPPA)
                if lo <= top and _blt(top, hi):
                    yield lo, _add_safe(a1, KAPPA_PLUS), "cardinal-successor-shift"
        if self.cls.t1:
            base = lo if not lo.is_finite else (OMEGA if _blt(OMEGA, hi) else None)
            if base is not None:
                for y in [base] + [t for t in tops if t >= base]:
                    yield star_star(base), add(y, KAPPA), "t1-star"
        if self.cls.kappa_t1:
            for y in [lo] + tops:
                for b in _lambda_bases(y):
                    yield b, _add_safe(b, KAPPA_PLUS), "lambda-t1-tail"

    def _triggers(self) -> bool:
        c = self.cls.card_bound
        if c is None:
            return False
        grew = False
        if self.kappa_trigger is None:
            hit = self._find(lambda lo, hi: self._kappa_point(lo, hi))
            if hit is not None:
                self.kappa_trigger = hit
                grew = True
        if c == ALEPH0 and self.omega_trigger is None:
            hit = self._find(lambda lo, hi: self._omega_point(lo, hi))
            if hit is not None:
                self.omega_trigger = _join(hit, ("small-space-omega",))
                grew |= self.add(mul(OMEGA, OMEGA), INF, self.omega_trigger)
        return grew

    def _find(self, pred) -> tuple[str, ...] | None:
        for s in self.merged():
            if pred(s.lo, s.hi):
                return s.trace
        return None

    def _omega_point(self, lo: Ordinal, hi: Bound) -> bool:
        """Does [lo, hi) contain a countable limit (or, union-closed, any nonzero countable)?"""
        if not lo < KAPPA:
            return False
        if self.cls.union_closed:
            return True
        nxt = lo if lo.is_limit else add(structure(lo).limit_part, OMEGA)
        return _blt(nxt, _bmin(hi, KAPPA))

    def _kappa_point(self, lo: Ordinal, hi: Bound) -> bool:
        if self.cls.union_closed and lo < KAPPA_PLUS:
            return True
        if _card_bound_base(lo) is not None and structure(lo).nat_tail == 0 and lo == _card_bound_base(lo):
            return True
        first = lo if lo.is_limit and lo == star(lo) else _next_kappa_multiple(lo)
        return first is not None and _is_kappa_multiple(first) and _blt(first, hi)

    # -- backward point rules

    def point_rule(self, x: Ordinal) -> tuple[Ordinal, Bound, tuple[str, ...]] | None:
        """A span containing x derived from the current D by one rule, if any."""
        x1 = add(x, ONE)
        for prefix, tail in right_tails(x):
            e, c = tail.terms[0]
            rest = Ordinal(tail.terms[1:])
            for n in range(2, c + 1):
                if c % n:
                    continue
                alpha = Ordinal([(e, c // n)] + list(rest.terms))
                if mul(alpha, n) != tail or (prefix.is_finite and alpha.is_finite):
                    continue
                tr = self.contains(add(prefix, alpha))
                if tr is not None:
                    return x, x1, _join(tr, ("tail-repeat",))
        if self.cls.union_closed:
            for prefix, tail in right_tails(x):
                if prefix.is_zero:
                    continue
                tr = self.contains(tail)
                if tr is not None:
                    return x, x1, _join(tr, ("union-prefix",))
            for g in self._product_candidates(x):
                tr = self.contains(g)
                if tr is not None and _right_divisors(x, g) is not None:
                    return x, x1, _join(tr, ("union-product",))
            nu = cofinality(x)
            if nu in (OMEGA, KAPPA, KAPPA_PLUS):
                tr = self.contains(nu)
                if tr is not None:
                    return x, x1, _join(tr, ("union-cofinality",))
        if self.cls.t1 and not x.is_finite:
            hit = self.meets(x, add(x, KAPPA))
            if hit is not None and star_star(hit[0]) <= x:
                return x, x1, _join(hit[1], ("t1-star",))
            for b in _omega_bases(x):
                hit = self.meets(b, add(b, KAPPA))
                if hit is not None:
                    return b, add(b, KAPPA), _join(hit[1], ("t1-countable-tail",))
        if self.cls.kappa_t1:
            for b in _lambda_bases(x):
                hi = _add_safe(b, KAPPA_PLUS)
                hit = self.meets(b, hi)
                if hit is not None:
                    return b, hi, _join(hit[1], ("lambda-t1-tail",))
        if self.kappa_trigger is not None:
            base = _card_bound_base(x)
            if base is not None:
                return base, add(base, mul(KAPPA, OMEGA)), _join(self.kappa_trigger, ("small-space-kappa",))
        return None

    def _product_candidates(self, x: Ordinal) -> list[Ordinal]:
        out = {t for _, t in right_tails(x)}
        out.update(Ordinal.of(n) for n in range(2, 5))
        out.update(s.lo for s in self.merged())
        return sorted((g for g in out if not g.is_zero and g < x), key=lambda g: g.key)


def _next_kappa_multiple(lo: Ordinal) -> Ordinal | None:
    """Least nonzero multiple of k that is >= lo."""
    if lo <= KAPPA:
        return KAPPA
    s = star(lo)
    if s == lo:
        return lo
    try:
        return add(s, KAPPA)
    except UnsupportedOrdinal:
        return None


def _anchors(x: Ordinal) -> list[Ordinal]:
    out = [x]
    if not x.is_finite:
        out.append(structure(x).limit_part)
    out.extend(p for p in prefixes(x) if not p.is_zero)
    seen, res = set(), []
    for y in out:
        if y not in seen and y <= x:
            seen.add(y)
            res.append(y)
    return res


# ---------------------------------------------------------------- entry points

GAP_STEPS = 200


def derive(src: Interval, cls: SpaceClass) -> Derivation:
    d = Derivation(cls)
    d.add(src.lo, src.end, ())
    c = cls.card_bound
    if c is not None:
        d.add(_successor_cardinal(c.as_ordinal()), INF, ("small-space-card",))
    d.saturate()
    return d


def positive(q: ImplicationQuery) -> Verdict | None:
    """Implied(trace) when the encoded transfer rules derive the target."""
    d = derive(q.src, q.cls)
    lo, end = q.dst.lo, q.dst.end
    for _ in range(GAP_STEPS):
        tr = d.best_cover(lo, end)
        if tr is not None:
            return Verdict("implied", tr or ("subinterval",))
        gap = d.first_gap(lo, end)
        if gap is None:
            return None
        step = None
        for y in _anchors(gap):
            if d.contains(y) is None:
                step = d.point_rule(y)
                if step is not None:
                    break
        if step is None or not d.add(*step):
            return None
        d.saturate()
    return None


def negative(q: ImplicationQuery) -> Verdict | None:
    """NotImplied(witness) when a catalogued space of the class separates the intervals."""
    from . import catalog

    for w, rule in catalog.witness_candidates(q):
        if not q.cls.admits(catalog.profile(w)):
            continue
        if catalog.is_compact(w, q.src).status != "yes":
            continue
        v = catalog.is_compact(w, q.dst)
        if v.status == "no":
            return Verdict("not_implied", (rule, v.rule) if v.rule != rule else (rule,), w)
    return None


def implies_compactness(q: ImplicationQuery) -> Verdict:
    return positive(q) or negative(q) or UNKNOWN


def implies(src: Interval | str, dst: Interval | str, cls: SpaceClass | str = ARBITRARY) -> Verdict:
    if isinstance(src, str):
        src = Interval.parse(src)
    if isinstance(dst, str):
        dst = Interval.parse(dst)
    if isinstance(cls, str):
        cls = SpaceClass.parse(cls)
    return implies_compactness(ImplicationQuery(src, dst, cls))
