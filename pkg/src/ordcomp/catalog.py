"""Symbolic descriptors for the standard example spaces and their compactness.

Verdicts work pointwise: a space is [b, a]-compact iff it is [g, g]-compact
for every g in [b, a].  Each descriptor knows some windows where it is
compact (Yes), some points where it is not (No), and nothing else.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Union

from . import finite
from .ordinal import (
    ALEPH0, KAPPA, KAPPA_CARD, KAPPA_PLUS, KAPPA_PLUS_CARD, OMEGA, ONE, CardClass, Ordinal,
    OrdinalError, UnsupportedOrdinal, add, as_ordinal, card, cofinality, mul, star,
)
from .sums import is_shifted_sum, star_sum
from .transfer import (
    ARBITRARY, INF, T1, TOP, UNION_CLOSED, Bound, ImplicationQuery, Interval, SpaceClass,
    _blt, _bmin, _card_bound_base, _next_kappa_multiple, _successor_cardinal, positive, prefixes,
)

# ---------------------------------------------------------------- descriptors


def _card_str(c: CardClass) -> str:
    return str(c)


def _card_parse(text: str) -> CardClass:
    t = str(text)
    named = {"w": ALEPH0, "k": KAPPA_CARD, "k+": KAPPA_PLUS_CARD}
    if t in named:
        return named[t]
    return CardClass.finite(int(t))


@dataclass(frozen=True)
class Discrete:
    card: CardClass

    def to_json(self) -> dict:
        return {"type": "discrete", "card": _card_str(self.card)}

    def __str__(self) -> str:
        return f"Discrete({self.card})"


@dataclass(frozen=True)
class Iit:
    """A regular cardinal (w or k) whose members are its initial segments."""

    card: CardClass = KAPPA_CARD

    def __post_init__(self):
        if self.card not in (ALEPH0, KAPPA_CARD):
            raise ValueError("Iit needs card w or k")

    def to_json(self) -> dict:
        return {"type": "iit", "card": _card_str(self.card)}

    def __str__(self) -> str:
        return f"Iit({self.card})"


@dataclass(frozen=True)
class Ord:
    """k with the order topology; k is uncountable."""

    def to_json(self) -> dict:
        return {"type": "ord", "card": "k"}

    def __str__(self) -> str:
        return "Ord(k)"


@dataclass(frozen=True)
class KappaKappa:
    """k*k with members [k*g, k*g + d] for g, d < k."""

    def to_json(self) -> dict:
        return {"type": "kappa_kappa"}

    def __str__(self) -> str:
        return "KappaKappa"


@dataclass(frozen=True)
class SBeta:
    beta: Ordinal
    alpha: Ordinal
    variant: str = "plain"

    def __post_init__(self):
        object.__setattr__(self, "beta", as_ordinal(self.beta))
        object.__setattr__(self, "alpha", as_ordinal(self.alpha))
        if self.beta.is_zero or self.alpha < self.beta:
            raise OrdinalError(f"SBeta needs 0 < beta <= alpha, got {self.beta}, {self.alpha}")
        if self.variant not in finite.VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")

    @property
    def is_finite(self) -> bool:
        return self.alpha.is_finite

    def to_json(self) -> dict:
        return {"type": "s_beta", "beta": str(self.beta), "alpha": str(self.alpha), "variant": self.variant}

    def __str__(self) -> str:
        return f"SBeta({self.beta}, {self.alpha}, {self.variant})"


@dataclass(frozen=True)
class DisjointUnion:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("DisjointUnion needs at least one part")

    def to_json(self) -> dict:
        return {"type": "disjoint_union", "parts": [p.to_json() for p in self.parts]}

    def __str__(self) -> str:
        return "(" + " + ".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class FrechetDisjointUnion:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("FrechetDisjointUnion needs at least one part")

    def to_json(self) -> dict:
        return {"type": "frechet_union", "parts": [p.to_json() for p in self.parts]}

    def __str__(self) -> str:
        return "Frechet(" + ", ".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class WithFiniteDiscrete:
    base: object
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be positive")

    def to_json(self) -> dict:
        return {"type": "with_finite_discrete", "base": self.base.to_json(), "m": self.m}

    def __str__(self) -> str:
        return f"({self.base} + Discrete({self.m}))"


SpaceDescr = Union[Discrete, Iit, Ord, KappaKappa, SBeta, DisjointUnion, FrechetDisjointUnion, WithFiniteDiscrete]


def from_json(d: dict) -> SpaceDescr:
    t = d["type"]
    if t == "discrete":
        return Discrete(_card_parse(d["card"]))
    if t == "iit":
        return Iit(_card_parse(d.get("card", "k")))
    if t == "ord":
        return Ord()
    if t == "kappa_kappa":
        return KappaKappa()
    if t == "s_beta":
        return SBeta(as_ordinal(d["beta"]), as_ordinal(d.get("alpha", d["beta"])), d.get("variant", "plain"))
    if t == "disjoint_union":
        return DisjointUnion(tuple(from_json(p) for p in d["parts"]))
    if t == "frechet_union":
        return FrechetDisjointUnion(tuple(from_json(p) for p in d["parts"]))
    if t == "with_finite_discrete":
        return WithFiniteDiscrete(from_json(d["base"]), int(d["m"]))
    raise ValueError(f"unknown space type {t!r}")


def x_beta(beta) -> SBeta:
    """The test space X(beta) = S_beta(beta) with the plain family."""
    return SBeta(beta, beta, "plain")


def iit_copies(n: int, c: CardClass = KAPPA_CARD) -> DisjointUnion:
    return DisjointUnion(tuple(Iit(c) for _ in range(n)))


# ---------------------------------------------------------------- profiles


@dataclass(frozen=True)
class ClassProfile:
    union_closed: bool
    t1: bool
    topology: bool
    kappa_t1: bool = False
    card: CardClass | None = None

    def to_json(self) -> dict:
        return {"union_closed": self.union_closed, "t1": self.t1, "topology": self.topology,
                "kappa_t1": self.kappa_t1, "card": None if self.card is None else str(self.card)}


def _flatten(s) -> list:
    if isinstance(s, DisjointUnion):
        return [q for p in s.parts for q in _flatten(p)]
    if isinstance(s, WithFiniteDiscrete):
        return _flatten(s.base) + [Discrete(CardClass.finite(s.m))]
    return [s]


def _card_sum(a: CardClass | None, b: CardClass | None) -> CardClass | None:
    if a is None or b is None:
        return None
    if a.is_finite and b.is_finite:
        return CardClass.finite(a.n + b.n)
    return max(a, b)


def _s_beta_card(s: SBeta) -> CardClass | None:
    if s.is_finite:
        b, a = s.beta.to_int(), s.alpha.to_int()
        return CardClass.finite(sum(comb(a, k) for k in range(b)))
    if s.beta.is_finite:
        return card(s.alpha)
    return None


def profile(s: SpaceDescr) -> ClassProfile:
    if isinstance(s, Discrete):
        return ClassProfile(True, True, True, True, s.card)
    if isinstance(s, Iit):
        return ClassProfile(True, False, True, False, s.card)
    if isinstance(s, Ord):
        return ClassProfile(True, True, True, False, KAPPA_CARD)
    if isinstance(s, KappaKappa):
        return ClassProfile(False, False, False, False, KAPPA_CARD)
    if isinstance(s, SBeta):
        c = _s_beta_card(s)
        v = s.variant
        if v == "tychonoff" and s.is_finite:
            return ClassProfile(True, True, True, True, c)
        return ClassProfile(v != "plain", v == "tychonoff", v in ("topology", "tychonoff"), False, c)
    if isinstance(s, (DisjointUnion, WithFiniteDiscrete, FrechetDisjointUnion)):
        parts = [profile(p) for p in (s.parts if isinstance(s, FrechetDisjointUnion) else _flatten(s))]
        c = parts[0].card
        for p in parts[1:]:
            c = _card_sum(c, p.card)
        if isinstance(s, FrechetDisjointUnion) and c is not None:
            c = _card_sum(c, CardClass.finite(1))
        return ClassProfile(all(p.union_closed for p in parts), all(p.t1 for p in parts),
                            all(p.topology for p in parts), all(p.kappa_t1 for p in parts), c)
    raise TypeError(f"not a space descriptor: {s!r}")


def space_class(s: SpaceDescr) -> SpaceClass:
    """The most specific engine class the space is known to belong to."""
    p = profile(s)
    if p.t1:
        return T1
    if p.union_closed:
        return UNION_CLOSED
    return ARBITRARY


# ---------------------------------------------------------------- verdicts


@dataclass(frozen=True)
class CompactVerdict:
    status: str  # yes | no | unknown
    rule: str = ""

    def to_json(self) -> dict:
        return {"verdict": self.status, "rule": self.rule or None}


YES = "yes"
NO = "no"
UNKNOWN_V = CompactVerdict("unknown")

Span = tuple[Ordinal, Bound, str]


def _n(k: int) -> Ordinal:
    return Ordinal.of(k)


def _finite_space(s) -> finite.FiniteSpace | None:
    if isinstance(s, Discrete) and s.card.is_finite:
        return None  # handled symbolically
    if isinstance(s, SBeta) and s.is_finite:
        a = s.alpha.to_int()
        if s.variant == "plain" and a <= 6 or s.variant == "unions" and a <= 4 or \
                s.variant == "topology" and a <= 3:
            return finite.construct_S_beta_space(s.beta.to_int(), a, s.variant)
    return None


@lru_cache(maxsize=1024)
def _finite_no_sizes(s) -> frozenset[int] | None:
    """For finite spaces: the g with [g, g]-incompactness (sizes of minimal covers)."""
    if isinstance(s, Discrete) and s.card.is_finite:
        return frozenset(range(1, s.card.n + 1))
    if isinstance(s, SBeta) and s.is_finite and s.variant == "tychonoff":
        return frozenset(range(1, _s_beta_card(s).n + 1))
    fs = _finite_space(s)
    if fs is None:
        return None
    return finite.minimal_cover_sizes(fs.family, fs.full)


def _base_spans(s) -> tuple[list[Span], list[Span]]:
    """(yes, no) windows [lo, hi) for the single-piece spaces."""
    one, two = ONE, _n(2)
    if isinstance(s, Discrete):
        if s.card.is_finite:
            n1 = _n(s.card.n + 1)
            return [(n1, INF, "discrete-finite")], [(one, n1, "discrete-finite")]
        nxt = _successor_cardinal(s.card.as_ordinal())
        yes = [(nxt, INF, "discrete-card")] if isinstance(nxt, Ordinal) else []
        return yes, [(one, nxt, "discrete-card")]
    if isinstance(s, Iit):
        lam = s.card.as_ordinal()
        lam1 = add(lam, ONE)
        return ([(two, lam, "iit-compact"), (lam1, INF, "iit-compact")],
                [(one, two, "nonempty"), (lam, lam1, "iit-incompact")])
    if isinstance(s, Ord):
        kw = add(KAPPA, OMEGA)
        # k+n is a shifted sum of k and n, and (k, ord) is homeomorphic to itself plus n points
        return ([(OMEGA, KAPPA, "ord-compact"), (kw, INF, "ord-compact")],
                [(one, OMEGA, "ord-finite-clopen"), (KAPPA, kw, "ord-incompact")])
    if isinstance(s, KappaKappa):
        return [(one, KAPPA, "small-cover-vacuous"), (KAPPA_PLUS, INF, "card-above")], []
    return [], []


def _special_windows(parts: list) -> list[Span]:
    """Windows needing more than the generic star-sum bound."""
    if len(parts) >= 2 and all(isinstance(p, Iit) for p in parts) and len({p.card for p in parts}) == 1:
        lam, n = parts[0].card.as_ordinal(), len(parts)
        out = [(_n(n + 1), lam, "iit-copies"), (add(mul(lam, n), ONE), INF, "iit-copies")]
        for j in range(2, n + 1):
            out.append((add(mul(lam, j - 1), _n(n - j + 2)), mul(lam, j), "iit-copies"))
        return out
    if len(parts) == 2 and all(isinstance(p, Ord) for p in parts):
        return [(add(KAPPA, OMEGA), mul(KAPPA, 2), "ord-copies"), (add(mul(KAPPA, 2), OMEGA), INF, "ord-copies")]
    return []


def _yes_spans(s) -> list[Span]:
    if isinstance(s, (DisjointUnion, WithFiniteDiscrete)):
        parts = _flatten(s)
        if len(parts) == 1:
            return _yes_spans(parts[0])
        acc = _yes_spans(parts[0])
        for p in parts[1:]:
            nxt = []
            for b1, a1, _ in acc:
                for b2, a2, _ in _yes_spans(p):
                    lo = star_sum(b1, b2)
                    hi = _bmin(a1, a2)
                    if _blt(lo, hi):
                        nxt.append((lo, hi, "star-sum"))
            acc = nxt
        return acc + _special_windows(parts)
    if isinstance(s, SBeta) and not s.is_finite:
        return []
    sizes = _finite_no_sizes(s)
    if sizes is not None:
        out, start = [], ONE
        for k in sorted(sizes):
            if start < _n(k):
                out.append((start, _n(k), "finite-exhaustive"))
            start = _n(k + 1)
        out.append((start, INF, "finite-exhaustive"))
        return out
    return _base_spans(s)[0]


def _covered(spans: list[Span], lo: Ordinal, end: Bound) -> str | None:
    cur, rules = lo, []
    for _ in range(len(spans) + 1):
        hit = [(a, b, r) for a, b, r in spans if a <= cur and _blt(cur, b)]
        if not hit:
            return None
        a, b, r = max(hit, key=lambda t: (0, t[1].key) if isinstance(t[1], Ordinal) else (1 if t[1] == TOP else 2,))
        if r not in rules:
            rules.append(r)
        if not _blt(b, end):
            return "+".join(rules)
        cur = b
    return None


def _subsums(g: Ordinal) -> list[Ordinal]:
    """Ordinals built from a sub-multiset of g's CNF terms, plus small finite tweaks."""
    opts: list[list[Ordinal]] = [[]]
    for e, c in g.terms:
        opts = [o + [Ordinal.omega_power(e, d)] if d else o for o in opts for d in range(c + 1)]
    out = set()
    for o in opts:
        x = Ordinal()
        for t in o:
            x = add(x, t)
        for k in range(3):
            y = add(x, _n(k))
            if not y.is_zero and y <= g:
                out.add(y)
    return sorted(out, key=lambda x: x.key)


def _no_point(s, g: Ordinal) -> str | None:
    """A rule showing s is not [g, g]-compact, if one applies."""
    if isinstance(s, (DisjointUnion, WithFiniteDiscrete)):
        parts = _flatten(s)
        return _no_union(tuple(parts), g)
    if isinstance(s, FrechetDisjointUnion):
        return None
    if isinstance(s, KappaKappa):
        if KAPPA <= g < KAPPA_PLUS and g == star(g):
            return "kappa-multiple"
        return None
    if isinstance(s, SBeta):
        sizes = _finite_no_sizes(s)
        if sizes is not None:
            return "finite-exhaustive" if g.is_finite and g.to_int() in sizes else None
        if g == s.beta:
            return "covers"
        if _engine_implies(s, Interval.point(g)):
            return "transfer-implication"
        return None
    sizes = _finite_no_sizes(s)
    if sizes is not None:
        return "finite-exhaustive" if g.is_finite and g.to_int() in sizes else None
    for lo, hi, r in _base_spans(s)[1]:
        if lo <= g and _blt(g, hi):
            return r
    return None


@lru_cache(maxsize=65536)
def _no_union(parts: tuple, g: Ordinal) -> str | None:
    if len(parts) == 1:
        return _no_point(parts[0], g)
    head, rest = parts[0], parts[1:]
    cands = _subsums(g)
    left = [a for a in cands if _no_point(head, a) is not None]
    if not left:
        return None
    right = [b for b in cands if _no_union(rest, b) is not None]
    for a in left:
        for b in right:
            if is_shifted_sum(g, a, b):
                return "shifted-sum-union"
    return None


@lru_cache(maxsize=4096)
def _engine_implies(s: SBeta, iv: Interval) -> bool:
    cls = {"plain": ARBITRARY, "unions": UNION_CLOSED, "topology": UNION_CLOSED, "tychonoff": T1}[s.variant]
    return positive(ImplicationQuery(iv, Interval.point(s.beta), cls)) is not None


def _targets(s, iv: Interval) -> list[Ordinal]:
    """Points of iv worth testing for incompactness."""
    lo, end = iv.lo, iv.end
    pts = [lo]
    if iv.hi is not None:
        top = iv.hi if iv.closed else None
        if top is not None:
            pts.append(top)
        ref = iv.hi
        pts.extend(prefixes(ref))
        pts.extend(_subsums(ref))
    for r in _interesting(s):
        pts.append(r)
    out, seen = [], set()
    for p in pts:
        if p not in seen and not p.is_zero and lo <= p and _blt(p, end):
            seen.add(p)
            out.append(p)
    return sorted(out, key=lambda p: p.key)


def _interesting(s) -> list[Ordinal]:
    if isinstance(s, (DisjointUnion, WithFiniteDiscrete)):
        parts = _flatten(s)
        acc = _interesting(parts[0])
        for p in parts[1:]:
            other = _interesting(p)
            acc = sorted({add(a, b) for a in acc for b in other} | {add(b, a) for a in acc for b in other}
                         | set(acc) | set(other), key=lambda x: x.key)[:200]
        return acc
    if isinstance(s, SBeta):
        return [s.beta]
    if isinstance(s, KappaKappa):
        return [KAPPA, mul(KAPPA, 2), mul(KAPPA, KAPPA)]
    if isinstance(s, Discrete) and s.card.is_finite:
        return [_n(k) for k in range(1, s.card.n + 1)]
    sizes = _finite_no_sizes(s)
    if sizes is not None:
        return [_n(k) for k in sorted(sizes)]
    out = []
    for lo, hi, _ in _base_spans(s)[1]:
        out.append(lo)
        if isinstance(hi, Ordinal) and hi.is_successor:
            out.append(add(lo, ONE) if add(lo, ONE) < hi else lo)
    out.extend([ONE, _n(2)])
    return sorted(set(out), key=lambda x: x.key)


def _all_points_card_differ(iv: Interval, c: CardClass) -> bool:
    if card(iv.lo) == c:
        return False
    if c.is_finite:
        # some finite point equals c unless c lies outside the interval
        n = c.as_ordinal()
        return not (iv.lo <= n and _blt(n, iv.end))
    if iv.lo > c.as_ordinal():
        return True
    # iv.lo is below c; points of card c start at c itself
    return not _blt(c.as_ordinal(), iv.end)


def _s_beta_yes(s: SBeta, iv: Interval) -> str | None:
    if s.variant != "plain" or s.alpha != s.beta:
        return None
    if _all_points_card_differ(iv, card(s.beta)):
        return "card-mismatch"
    nus = (mul(KAPPA, OMEGA), mul(KAPPA, KAPPA))
    if s.beta in nus and iv.hi is not None and iv.closed and iv.lo == iv.hi:
        if iv.lo in (mul(KAPPA, 2), add(mul(KAPPA, KAPPA), KAPPA)):
            return "no-transfer-map"
    return None


def _as_interval(b, a=None) -> Interval:
    if isinstance(b, Interval):
        return b
    if isinstance(b, str) and a is None and b.lstrip().startswith("["):
        return Interval.parse(b)
    return Interval(as_ordinal(b), as_ordinal(a if a is not None else b), True)


def is_compact(s: SpaceDescr, b, a=None) -> CompactVerdict:
    """Is s [b, a]-compact?  ``b`` may also be an Interval or its text."""
    iv = _as_interval(b, a)
    if isinstance(s, FrechetDisjointUnion):
        return UNKNOWN_V
    if isinstance(s, SBeta) and not s.is_finite:
        r = _s_beta_yes(s, iv)
        if r:
            return CompactVerdict(YES, r)
        if iv.lo <= s.beta and _blt(s.beta, iv.end):
            return CompactVerdict(NO, "covers")
        if _engine_implies(s, iv):
            return CompactVerdict(NO, "transfer-implication")
        return UNKNOWN_V
    r = _covered(_yes_spans(s), iv.lo, iv.end)
    if r is not None:
        return CompactVerdict(YES, r)
    if isinstance(s, KappaKappa):
        nxt = _next_kappa_multiple(iv.lo)
        if nxt is None or not _blt(nxt, _bmin(iv.end, KAPPA_PLUS)):
            return CompactVerdict(YES, "not-kappa-multiple")
        return CompactVerdict(NO, "kappa-multiple")
    for g in _targets(s, iv):
        r = _no_point(s, g)
        if r is not None:
            return CompactVerdict(NO, r)
    return UNKNOWN_V


# ---------------------------------------------------------------- Lindelof ordinals


def lindelof_ordinal(s: SpaceDescr) -> Ordinal | None:
    """Least a with s [a, inf)-compact; None when not determined (or not representable)."""
    if isinstance(s, Discrete):
        if s.card.is_finite:
            return _n(s.card.n + 1)
        if s.card == KAPPA_CARD:
            return KAPPA_PLUS
        return None  # w_1 and k++ are outside the fragment
    if isinstance(s, Iit):
        return add(s.card.as_ordinal(), ONE)
    if isinstance(s, Ord):
        return add(KAPPA, OMEGA)
    if isinstance(s, KappaKappa):
        return KAPPA_PLUS
    if isinstance(s, SBeta):
        sizes = _finite_no_sizes(s)
        if sizes is None:
            return None
        return _n(max(sizes, default=0) + 1)
    if isinstance(s, (DisjointUnion, WithFiniteDiscrete)):
        vals = [lindelof_ordinal(p) for p in _flatten(s)]
        if any(v is None for v in vals):
            return None
        out = vals[0]
        for v in vals[1:]:
            out = star_sum(out, v)
        return out
    return None


def admissible_lindelof(b, constraint: str | SpaceClass) -> bool:
    """Can b be the Lindelof ordinal of a space obeying the constraint?

    constraint is "t1", "card_bound:w" or "card_bound:k".
    """
    b = as_ordinal(b)
    cls = SpaceClass.parse(constraint) if isinstance(constraint, str) else constraint
    if cls.kind == "t1":
        if b.is_finite or b == OMEGA:
            return True
        cf = cofinality(b)
        if cf in (KAPPA, KAPPA_PLUS):
            return True
        if cf == OMEGA:
            if b == star(b):
                return True
            head = Ordinal(b.terms[:-1]) if b.terms[-1][1] == 1 else None
            if b.last_exponent == OMEGA.last_exponent and b.terms[-1][1] == 1 and head is not None \
                    and not head.is_zero and cofinality(head) in (KAPPA, KAPPA_PLUS):
                return True
        return False
    c = cls.card_bound
    if c == ALEPH0:
        return b <= mul(OMEGA, OMEGA)
    if c == KAPPA_CARD:
        if not b <= KAPPA_PLUS:
            return False
        base = _card_bound_base(b)
        return base is None or base == b
    raise ValueError(f"unsupported constraint {constraint!r}")


# ---------------------------------------------------------------- witnesses for the engine


def _catalog() -> list[SpaceDescr]:
    out: list[SpaceDescr] = [Iit(ALEPH0), Iit(KAPPA_CARD), Ord(), KappaKappa()]
    out += [Discrete(CardClass.finite(n)) for n in range(1, 6)]
    out += [Discrete(ALEPH0), Discrete(KAPPA_CARD), Discrete(KAPPA_PLUS_CARD)]
    out += [iit_copies(n) for n in range(2, 5)] + [iit_copies(2, ALEPH0)]
    out += [DisjointUnion((Ord(), Ord()))]
    out += [WithFiniteDiscrete(Iit(KAPPA_CARD), m) for m in range(1, 4)]
    out += [WithFiniteDiscrete(Iit(ALEPH0), m) for m in range(1, 3)]
    return out


CATALOG = tuple(_catalog())


def _dst_points(q: ImplicationQuery) -> list[Ordinal]:
    d = q.dst
    pts = [d.lo]
    if d.hi is not None:
        if d.closed:
            pts.append(d.hi)
        pts.extend(p for p in prefixes(d.hi) if not p.is_zero)
    return [p for p in dict.fromkeys(pts) if d.lo <= p and _blt(p, d.end)]


def witness_candidates(q: ImplicationQuery) -> Iterator[tuple[SpaceDescr, str]]:
    """Spaces to try as separating examples, with the rule naming the reason."""
    kk = {mul(KAPPA, 2), add(mul(KAPPA, KAPPA), KAPPA)}
    if q.src.hi is not None and q.src.closed and q.src.lo == q.src.hi and q.src.lo in kk:
        for nu in (OMEGA, KAPPA):
            t = mul(KAPPA, nu)
            if q.dst.lo <= t and _blt(t, q.dst.end):
                yield x_beta(t), "no-transfer-map"
    for t in _dst_points(q):
        try:
            yield x_beta(t), "card-mismatch"
        except (OrdinalError, UnsupportedOrdinal):
            pass
    for s in CATALOG:
        yield s, "catalog-witness"
