"""Ordinals in a two-tier Cantor normal form.

Every value is a finite sum ``w^e1*c1 + ... + w^en*cn`` with strictly
decreasing exponents.  Exponents are themselves split into tiers:
``k+ * kp + k * ke + tail`` where ``k`` is a symbolic regular uncountable
cardinal (so ``k = w^k``), ``k+`` its successor cardinal, and ``ke``,
``tail`` are pure ordinals below epsilon_0.

``k+`` is supported as a value (comparison, cardinality, cofinality and as
an interval endpoint) but never inside a larger exponent: anything that
would need ``w^(k+ + 1)`` or ``(k+)^2`` raises ``UnsupportedOrdinal``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

__all__ = [
    "OrdinalError", "OrdinalSyntaxError", "UnsupportedOrdinal", "Exponent", "Ordinal",
    "CardClass", "Structure", "ZERO", "ONE", "OMEGA", "KAPPA", "KAPPA_PLUS",
    "ALEPH0", "KAPPA_CARD", "KAPPA_PLUS_CARD", "parse", "cmp", "add", "left_sub",
    "mul", "power", "natural_sum", "structure", "limit_part", "cofinality", "card",
    "star", "star_star", "star_lambda", "tail_invariants", "as_ordinal",
]


class OrdinalError(ArithmeticError):
    """Domain error in ordinal arithmetic."""


class OrdinalSyntaxError(OrdinalError, ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class UnsupportedOrdinal(OrdinalError):
    """The result would fall outside the representable fragment."""


class Exponent:
    """Exponent ``k+ * kp + k * ke + tail`` of a single CNF term."""

    __slots__ = ("kp", "ke", "tail", "key")

    def __init__(self, kp: int, ke: "Ordinal", tail: "Ordinal"):
        if kp < 0:
            raise OrdinalError("negative k+ coefficient")
        if kp and (kp > 1 or ke.terms or tail.terms):
            raise UnsupportedOrdinal("k+ only supported as a standalone exponent")
        if not (ke.is_pure and tail.is_pure):
            raise UnsupportedOrdinal("exponent coefficients must be pure ordinals")
        self.kp = kp
        self.ke = ke
        self.tail = tail
        self.key = (kp, ke.key, tail.key)

    @staticmethod
    def pure(tail: "Ordinal") -> "Exponent":
        return Exponent(0, ZERO, tail)

    @staticmethod
    def from_ordinal(x: "Ordinal") -> "Exponent":
        """Read an ordinal value back as an exponent, if representable."""
        kp = 0
        ke_terms: list[tuple[Exponent, int]] = []
        tail_terms: list[tuple[Exponent, int]] = []
        for e, c in x.terms:
            if e.kp:
                if e.ke.terms or e.tail.terms:
                    raise UnsupportedOrdinal(f"w^({x}) is not representable")
                kp = c
            elif e.ke.terms:
                if e.ke != ONE:
                    raise UnsupportedOrdinal(f"w^({x}) is not representable")
                ke_terms.append((Exponent.pure(e.tail), c))
            else:
                tail_terms.append((e, c))
        return Exponent(kp, Ordinal(ke_terms), Ordinal(tail_terms))

    def to_ordinal(self) -> "Ordinal":
        terms: list[tuple[Exponent, int]] = []
        if self.kp:
            terms.append((_KP_EXP, self.kp))
        terms.extend((Exponent(0, ONE, e.tail), c) for e, c in self.ke.terms)
        terms.extend(self.tail.terms)
        return Ordinal(terms)

    @property
    def is_zero(self) -> bool:
        return not (self.kp or self.ke.terms or self.tail.terms)

    @property
    def is_successor(self) -> bool:
        return self.tail.is_successor

    @property
    def is_pure(self) -> bool:
        return not (self.kp or self.ke.terms)

    def __add__(self, other: "Exponent") -> "Exponent":
        if other.kp:
            return Exponent(self.kp + other.kp, other.ke, other.tail)
        if other.ke.terms:
            return Exponent(self.kp, add(self.ke, other.ke), other.tail)
        return Exponent(self.kp, self.ke, add(self.tail, other.tail))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Exponent) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: "Exponent") -> bool:
        return self.key < other.key

    def __le__(self, other: "Exponent") -> bool:
        return self.key <= other.key

    def __gt__(self, other: "Exponent") -> bool:
        return self.key > other.key

    def __ge__(self, other: "Exponent") -> bool:
        return self.key >= other.key

    def __str__(self) -> str:
        parts = []
        if self.kp:
            parts.append("k+")
        if self.ke.terms:
            parts.append("k" if self.ke == ONE else "k*" + _wrap(self.ke))
        if self.tail.terms or not parts:
            parts.append(str(self.tail))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Exponent({self})"


Term = tuple[Exponent, int]
OrdLike = Union["Ordinal", int]


class Ordinal:
    """Immutable ordinal value; ``terms`` are ``(exponent, coefficient)`` pairs."""

    __slots__ = ("terms", "key", "_pure")

    def __init__(self, terms: Iterable[Term] = ()):
        self.terms: tuple[Term, ...] = tuple(terms)
        prev = None
        for e, c in self.terms:
            if c < 1 or (prev is not None and not e < prev):
                raise OrdinalError("terms must have positive coefficients and decreasing exponents")
            prev = e
        self.key = tuple((e.key, c) for e, c in self.terms)
        self._pure = all(e.is_pure for e, _ in self.terms)

    @staticmethod
    def of(n: int) -> "Ordinal":
        if n < 0:
            raise OrdinalError("ordinals are non-negative")
        return Ordinal([(_ZERO_EXP, n)]) if n else ZERO

    @staticmethod
    def omega_power(e: Exponent, c: int = 1) -> "Ordinal":
        return Ordinal([(e, c)])

    @property
    def is_pure(self) -> bool:
        return self._pure

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return all(e.is_zero for e, _ in self.terms)

    @property
    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero

    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero

    def to_int(self) -> int:
        if not self.is_finite:
            raise OrdinalError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    def __int__(self) -> int:
        return self.to_int()

    @property
    def last_exponent(self) -> Exponent:
        if not self.terms:
            raise OrdinalError("zero has no terms")
        return self.terms[-1][0]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Ordinal.of(other) if other >= 0 else None
        return isinstance(other, Ordinal) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: OrdLike) -> bool:
        return self.key < as_ordinal(other).key

    def __le__(self, other: OrdLike) -> bool:
        return self.key <= as_ordinal(other).key

    def __gt__(self, other: OrdLike) -> bool:
        return self.key > as_ordinal(other).key

    def __ge__(self, other: OrdLike) -> bool:
        return self.key >= as_ordinal(other).key

    def __add__(self, other: OrdLike) -> "Ordinal":
        return add(self, other)

    def __radd__(self, other: int) -> "Ordinal":
        return add(other, self)

    def __mul__(self, other: OrdLike) -> "Ordinal":
        return mul(self, other)

    def __rmul__(self, other: int) -> "Ordinal":
        return mul(other, self)

    def __pow__(self, other: OrdLike) -> "Ordinal":
        return power(self, other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.terms:
            if e.is_zero:
                out.append(str(c))
                continue
            base = "w" if e == _ONE_EXP else "w^" + _wrap_exp(e)
            out.append(base if c == 1 else f"{base}*{c}")
        return " + ".join(out)

    def __repr__(self) -> str:
        return f"Ordinal({str(self)!r})"


def _wrap(x: Ordinal) -> str:
    s = str(x)
    return s if len(x.terms) <= 1 and " " not in s else f"({s})"


def _wrap_exp(e: Exponent) -> str:
    s = str(e)
    return s if s.isdigit() or s in ("w", "k") else f"({s})"


ZERO = Ordinal()
_ZERO_EXP = Exponent(0, ZERO, ZERO)
ONE = Ordinal([(_ZERO_EXP, 1)])
_ONE_EXP = Exponent.pure(ONE)
OMEGA = Ordinal([(_ONE_EXP, 1)])
_K_EXP = Exponent(0, ONE, ZERO)
KAPPA = Ordinal([(_K_EXP, 1)])
_KP_EXP = Exponent(1, ZERO, ZERO)
KAPPA_PLUS = Ordinal([(_KP_EXP, 1)])


def as_ordinal(x: OrdLike | str) -> Ordinal:
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not an ordinal")
    if isinstance(x, int):
        return Ordinal.of(x)
    if isinstance(x, str):
        return parse(x)
    raise TypeError(f"cannot interpret {x!r} as an ordinal")


# ---------------------------------------------------------------- arithmetic

def cmp(a: OrdLike, b: OrdLike) -> int:
    ka, kb = as_ordinal(a).key, as_ordinal(b).key
    return (ka > kb) - (ka < kb)


def add(a: OrdLike, b: OrdLike) -> Ordinal:
    a, b = as_ordinal(a), as_ordinal(b)
    if not b.terms:
        return a
    lead, lc = b.terms[0]
    kept: list[Term] = []
    for e, c in a.terms:
        if e > lead:
            kept.append((e, c))
        elif e == lead:
            return Ordinal(kept + [(e, c + lc)] + list(b.terms[1:]))
        else:
            break
    return Ordinal(kept + list(b.terms))


def left_sub(a: OrdLike, g: OrdLike) -> Ordinal:
    """The unique x with a + x = g (requires a <= g)."""
    a, g = as_ordinal(a), as_ordinal(g)
    if a > g:
        raise OrdinalError(f"left_sub: {a} > {g}")
    for i, (e, c) in enumerate(g.terms):
        if i >= len(a.terms):
            return Ordinal(g.terms[i:])
        ea, ca = a.terms[i]
        if (ea, ca) == (e, c):
            continue
        if ea == e:
            return Ordinal([(e, c - ca)] + list(g.terms[i + 1:]))
        return Ordinal(g.terms[i:])
    return ZERO


def mul(a: OrdLike, b: OrdLike) -> Ordinal:
    a, b = as_ordinal(a), as_ordinal(b)
    if not a.terms or not b.terms:
        return ZERO
    lead, lc = a.terms[0]
    out: list[Term] = []
    for e, c in b.terms:
        if e.is_zero:
            out.append((lead, lc * c))
            out.extend(a.terms[1:])
        else:
            out.append((lead + e, c))
    return Ordinal(out)


def power(a: OrdLike, b: OrdLike) -> Ordinal:
    """Exponentiation on the supported fragment.

    Supported: any base with a finite exponent, base ``w`` with any
    representable exponent, and base ``k`` with a pure exponent.
    """
    a, b = as_ordinal(a), as_ordinal(b)
    if b.is_zero:
        return ONE
    if a.is_zero or a == ONE:
        return a
    if b.is_finite:
        n = b.to_int()
        result, base = ONE, a
        while n:
            if n & 1:
                result = mul(result, base)
            n >>= 1
            if n:
                base = mul(base, base)
        return result
    if a == OMEGA:
        return Ordinal.omega_power(Exponent.from_ordinal(b))
    if a == KAPPA and b.is_pure:
        return Ordinal.omega_power(Exponent(0, b, ZERO))
    raise UnsupportedOrdinal(f"({a})^({b}) is outside the supported fragment")


def natural_sum(a: OrdLike, b: OrdLike) -> Ordinal:
    a, b = as_ordinal(a), as_ordinal(b)
    merged: dict[Exponent, int] = {}
    for e, c in a.terms + b.terms:
        merged[e] = merged.get(e, 0) + c
    return Ordinal(sorted(merged.items(), key=lambda t: t[0].key, reverse=True))


# ---------------------------------------------------------------- structure

@dataclass(frozen=True)
class Structure:
    is_zero: bool
    is_successor: bool
    is_limit: bool
    limit_part: Ordinal
    nat_tail: int


def structure(a: OrdLike) -> Structure:
    a = as_ordinal(a)
    if a.is_successor:
        n = a.terms[-1][1]
        lim = Ordinal(a.terms[:-1])
    else:
        n, lim = 0, a
    return Structure(a.is_zero, a.is_successor, a.is_limit, lim, n)


def limit_part(a: OrdLike) -> Ordinal:
    """Largest limit ordinal <= a, for infinite a."""
    a = as_ordinal(a)
    if a.is_finite:
        raise OrdinalError(f"limit part undefined for finite {a}")
    return structure(a).limit_part


def cofinality(a: OrdLike) -> Ordinal:
    a = as_ordinal(a)
    if a.is_zero:
        return ZERO
    e = a.last_exponent
    if e.is_zero:
        return ONE
    if e.is_successor:
        return OMEGA
    if e.tail.terms:
        return cofinality(e.tail)
    if e.ke.terms:
        return KAPPA if e.ke.is_successor else cofinality(e.ke)
    return KAPPA_PLUS


@dataclass(frozen=True, order=True)
class CardClass:
    """Cardinality class: Finite(n) < Aleph0 < Kappa < KappaPlus."""

    rank: int
    n: int = 0

    @staticmethod
    def finite(n: int) -> "CardClass":
        return CardClass(0, n)

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    def as_ordinal(self) -> Ordinal:
        return (Ordinal.of(self.n), OMEGA, KAPPA, KAPPA_PLUS)[self.rank]

    def __str__(self) -> str:
        return (str(self.n), "w", "k", "k+")[self.rank]

    def __repr__(self) -> str:
        return (f"Finite({self.n})", "Aleph0", "Kappa", "KappaPlus")[self.rank]


ALEPH0 = CardClass(1)
KAPPA_CARD = CardClass(2)
KAPPA_PLUS_CARD = CardClass(3)


def card(a: OrdLike) -> CardClass:
    a = as_ordinal(a)
    if not a.terms:
        return CardClass.finite(0)
    lead = a.terms[0][0]
    if lead.kp:
        return KAPPA_PLUS_CARD
    if lead.ke.terms:
        return KAPPA_CARD
    if not lead.is_zero:
        return ALEPH0
    return CardClass.finite(a.terms[0][1])


# ---------------------------------------------------------------- tails

def star_lambda(b: OrdLike, lam: CardClass) -> Ordinal:
    """Least x <= b with |[x, b]| <= lam (lam is Aleph0 or Kappa)."""
    b = as_ordinal(b)
    if lam == ALEPH0:
        return Ordinal(t for t in b.terms if not t[0].is_pure)
    if lam == KAPPA_CARD:
        return Ordinal(t for t in b.terms if t[0].kp)
    raise OrdinalError(f"unsupported cardinal {lam!r} for tail invariant")


def star(b: OrdLike) -> Ordinal:
    return star_lambda(b, ALEPH0)


def star_star(b: OrdLike) -> Ordinal:
    b = as_ordinal(b)
    if b.is_finite:
        raise OrdinalError("star_star needs an infinite ordinal")
    s = star(b)
    rest = left_sub(s, b)
    if cofinality(s) == OMEGA or rest.is_finite:
        return s
    return add(s, OMEGA)


def tail_invariants(b: OrdLike, mode: str, lam: CardClass | None = None) -> Ordinal:
    if mode == "star":
        return star(b)
    if mode == "star_star":
        return star_star(b)
    if mode == "star_lambda":
        if lam is None:
            raise OrdinalError("star_lambda needs a cardinal")
        return star_lambda(b, lam)
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------- parsing

_ATOM_START = set("0123456789wk(ωκ")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("num", text[i:j], i))
            i = j
        elif ch in "wω":
            toks.append(("w", ch, i))
            i += 1
        elif ch in "kκ":
            j = i + 1
            if j < n and text[j] == "⁺":
                toks.append(("k+", "k+", i))
                i = j + 1
                continue
            if j < n and text[j] == "+":
                m = j + 1
                while m < n and text[m].isspace():
                    m += 1
                if m >= n or text[m] not in _ATOM_START:
                    toks.append(("k+", "k+", i))
                    i = j + 1
                    continue
            toks.append(("k", ch, i))
            i += 1
        elif ch in "+*^()":
            toks.append((ch, ch, i))
            i += 1
        elif ch == "·":
            toks.append(("*", ch, i))
            i += 1
        else:
            raise OrdinalSyntaxError(f"unexpected character {ch!r}", text, i)
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str, allow_kplus: bool):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.allow_kplus = allow_kplus

    def peek(self) -> str:
        return self.toks[self.i][0]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        if tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            raise OrdinalSyntaxError(f"expected {want}", self.text, tok[2])
        self.i += 1
        return tok

    def expr(self) -> Ordinal:
        val = self.product()
        while self.peek() == "+":
            self.i += 1
            val = add(val, self.product())
        return val

    def product(self) -> Ordinal:
        val = self.power()
        while self.peek() == "*":
            self.i += 1
            val = mul(val, self.power())
        return val

    def power(self) -> Ordinal:
        pos = self.toks[self.i][2]
        base = self.atom()
        if self.peek() == "^":
            self.i += 1
            exp = self.power()
            try:
                return power(base, exp)
            except UnsupportedOrdinal as err:
                raise UnsupportedOrdinal(f"{err} (at position {pos})") from None
        return base

    def atom(self) -> Ordinal:
        kind, val, pos = self.toks[self.i]
        if kind == "num":
            self.i += 1
            return Ordinal.of(int(val))
        if kind == "w":
            self.i += 1
            return OMEGA
        if kind == "k":
            self.i += 1
            return KAPPA
        if kind == "k+":
            if not self.allow_kplus:
                raise OrdinalSyntaxError("k+ is disabled", self.text, pos)
            self.i += 1
            return KAPPA_PLUS
        if kind == "(":
            self.i += 1
            v = self.expr()
            self.take(")")
            return v
        what = "end of input" if kind == "end" else repr(val)
        raise OrdinalSyntaxError(f"unexpected {what}", self.text, pos)


@lru_cache(maxsize=4096)
def parse(text: str, allow_kplus: bool = True) -> Ordinal:
    """Parse an ordinal expression such as ``"w^(k*2) + w^k*3 + 5"``."""
    p = _Parser(text, allow_kplus)
    val = p.expr()
    p.take("end")
    return val
