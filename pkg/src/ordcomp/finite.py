"""Exhaustive ground truth on finite set systems.

A finite space is a point count plus a family of subsets stored as bitmasks.
At finite ordinals order type is cardinality, so [m, n]-compactness says:
every length-n sequence of members covering the space has a subcover
indexed by fewer than m positions.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class FiniteSpace:
    size: int
    family: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        if not self.family:
            raise ValueError("family must be nonempty")
        full = self.full
        for o in self.family:
            if o & ~full:
                raise ValueError(f"member {o:b} has points outside the space")

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    @property
    def covered(self) -> bool:
        """Whether the family covers the space at all."""
        u = 0
        for o in self.family:
            u |= o
        return u == self.full

    @property
    def union_closed(self) -> bool:
        fam = set(self.family)
        return all(a | b in fam for a in fam for b in fam)

    @property
    def t1(self) -> bool:
        fam = set(self.family)
        return all(o & ~(1 << x) in fam for o in fam for x in range(self.size) if o >> x & 1)

    def members(self, o: int) -> list[int]:
        return [x for x in range(self.size) if o >> x & 1]

    def to_json(self) -> dict:
        return {"size": self.size, "family": [self.members(o) for o in self.family], "name": self.name}

    @staticmethod
    def from_sets(size: int, sets: Iterable[Iterable[int]], name: str = "") -> "FiniteSpace":
        return FiniteSpace(size, tuple(sum(1 << x for x in set(s)) for s in sets), name)


def _union(masks: Iterable[int]) -> int:
    u = 0
    for m in masks:
        u |= m
    return u


# ---------------------------------------------------------------- compactness


@lru_cache(maxsize=4096)
def minimal_cover_sizes(family: tuple[int, ...], full: int) -> frozenset[int]:
    """Sizes of the inclusion-minimal subfamilies of distinct members covering ``full``."""
    fam = sorted(set(family))
    sizes: set[int] = set()

    def minimal(chosen: list[int]) -> bool:
        for i in range(len(chosen)):
            if _union(chosen[:i] + chosen[i + 1:]) == full:
                return False
        return True

    def go(start: int, chosen: list[int], u: int) -> None:
        if u == full:
            if minimal(chosen):
                sizes.add(len(chosen))
            return
        for i in range(start, len(fam)):
            o = fam[i]
            if o & ~u:
                chosen.append(o)
                go(i + 1, chosen, u | o)
                chosen.pop()

    go(0, [], 0)
    return frozenset(sizes)


def is_compact_bruteforce(s: FiniteSpace, m: int, n: int) -> bool:
    """[m, n]-compactness.

    A covering sequence of length n uses some set D of distinct members with
    |D| <= n, and repetitions never help a subcover.  It lacks a subcover of
    size < m iff D contains an inclusion-minimal cover of size >= m.  So the
    space fails exactly when some minimal cover has size in [m, n].
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    return not any(m <= k <= n for k in minimal_cover_sizes(s.family, s.full))


def compact_by_sequences(s: FiniteSpace, m: int, n: int) -> bool:
    """The definition verbatim: every length-n covering sequence, every H."""
    full = s.full
    for seq in product(s.family, repeat=n):
        if _union(seq) != full:
            continue
        if not any(_union(seq[i] for i in h) == full for k in range(m) for h in combinations(range(n), k)):
            return False
    return True


def _irredundant_sequences(s: FiniteSpace, n: int) -> Iterator[tuple[int, ...]]:
    """Covering sequences of length <= n where no member lies inside the union of the earlier ones."""
    full = s.full

    def go(seq: tuple[int, ...], u: int) -> Iterator[tuple[int, ...]]:
        if u == full:
            yield seq
            return
        if len(seq) == n:
            return
        for o in s.family:
            if o & ~u:
                yield from go(seq + (o,), u | o)

    yield from go((), 0)


def compact_irredundant(s: FiniteSpace, m: int, n: int) -> bool:
    """The restricted condition: only irredundant covering sequences are tested."""
    full = s.full
    for seq in _irredundant_sequences(s, n):
        if not any(_union(h) == full for k in range(m) for h in combinations(seq, k)):
            return False
    return True


def irredundant_equiv_check(s: FiniteSpace, m: int, n: int) -> bool:
    return compact_irredundant(s, m, n) == is_compact_bruteforce(s, m, n)


def is_WZ_compact(s: FiniteSpace, Z_size: int, W: Sequence[Iterable[int]]) -> bool:
    """Every Z-indexed covering sequence has a member w of W indexing a subcover."""
    ws = [tuple(w) for w in W]
    for w in ws:
        if any(not 0 <= z < Z_size for z in w):
            raise ValueError(f"index set {w} not inside range({Z_size})")
    full = s.full
    for seq in product(s.family, repeat=Z_size):
        if _union(seq) == full and not any(_union(seq[z] for z in w) == full for w in ws):
            return False
    return True


# ---------------------------------------------------------------- constructions


def disjoint_union(s1: FiniteSpace, s2: FiniteSpace) -> FiniteSpace:
    """Members of either copy, plus every union of one member from each."""
    shift = s1.size
    f1 = list(dict.fromkeys(s1.family))
    f2 = [o << shift for o in dict.fromkeys(s2.family)]
    fam = f1 + f2 + [a | b for a in f1 for b in f2]
    return FiniteSpace(s1.size + s2.size, tuple(dict.fromkeys(fam)), f"({s1.name} + {s2.name})")


def frechet_union(spaces: Sequence[FiniteSpace]) -> FiniteSpace:
    """Disjoint copies plus a new last point x; each summand family gets the empty set.

    Members: unions of one member per summand, with or without x.  Over a
    finite index set the cofinite-X_i clause is no restriction.
    """
    if not spaces:
        raise ValueError("need at least one summand")
    offs, total = [], 0
    for s in spaces:
        offs.append(total)
        total += s.size
    x = 1 << total
    choices = [sorted(set(s.family) | {0}) for s in spaces]
    fam = set()
    for pick in product(*choices):
        o = sum(m << off for m, off in zip(pick, offs))
        fam.add(o)
        fam.add(o | x)
    name = "frechet(" + ", ".join(s.name for s in spaces) + ")"
    return FiniteSpace(total + 1, tuple(sorted(fam)), name)


def discrete(n: int) -> FiniteSpace:
    return FiniteSpace(n, tuple(range(1 << n)), f"discrete({n})")


VARIANTS = ("plain", "unions", "topology", "tychonoff")


def s_beta_points(beta: int, alpha: int) -> list[frozenset[int]]:
    return [frozenset(c) for k in range(beta) for c in combinations(range(alpha), k)]


def construct_S_beta_space(beta: int, alpha: int, variant: str = "plain") -> FiniteSpace:
    """Subsets of alpha of size < beta; the first alpha members are Z(0), ..., Z(alpha-1).

    Z(e) holds the points whose support misses e.
    """
    if not 0 < beta <= alpha:
        raise ValueError(f"need 0 < beta <= alpha, got {beta}, {alpha}")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    pts = s_beta_points(beta, alpha)
    n = len(pts)
    zs = [sum(1 << i for i, p in enumerate(pts) if e not in p) for e in range(alpha)]
    name = f"S_{beta}({alpha}) {variant}"
    if variant == "plain":
        return FiniteSpace(n, tuple(zs), name)
    if variant == "tychonoff":
        # a finite subspace of 2^alpha is discrete
        return FiniteSpace(n, tuple(zs) + tuple(o for o in range(1 << n) if o not in zs), name)
    base = list(zs)
    if variant == "topology":
        base = list({_intersect_all(c, (1 << n) - 1) for k in range(alpha + 1) for c in combinations(zs, k)})
    closed = _union_closure(base)
    if variant == "topology":
        closed |= {0, (1 << n) - 1}
    return FiniteSpace(n, tuple(zs) + tuple(sorted(closed - set(zs))), name)


def _intersect_all(masks: Iterable[int], full: int) -> int:
    out = full
    for m in masks:
        out &= m
    return out


def _union_closure(masks: Iterable[int]) -> set[int]:
    out = set(masks)
    frontier = set(out)
    while frontier:
        new = {a | b for a in frontier for b in out} - out
        out |= new
        frontier = new
    return out


def covers(s: FiniteSpace, idxs: Iterable[int]) -> bool:
    return _union(s.family[i] for i in idxs) == s.full


def covers_criterion_check(alpha_max: int = 5) -> list[tuple[int, int, tuple[int, ...]]]:
    """Mismatches of "(Z(e))_{e in H} covers iff |H| >= beta" on S_beta(alpha)."""
    bad = []
    for alpha in range(1, alpha_max + 1):
        for beta in range(1, alpha + 1):
            s = construct_S_beta_space(beta, alpha)
            for k in range(alpha + 1):
                for h in combinations(range(alpha), k):
                    if covers(s, h) != (k >= beta):
                        bad.append((beta, alpha, h))
    return bad


def _injection_condition(beta: int, alpha: int) -> bool:
    """Some injective f: beta -> alpha with |f^-1(K)| < beta for every |K| < alpha."""
    for f in permutations(range(alpha), beta):
        image = set(f)
        ok = True
        for k in range(alpha):
            for K in combinations(range(alpha), k):
                if len(image.intersection(K)) >= beta:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


@dataclass(frozen=True)
class InjectionRecord:
    alpha: int
    beta: int
    a: bool  # X(beta) not [alpha, alpha]-compact
    b: bool  # the injection exists

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class InjectionReport:
    records: tuple[InjectionRecord, ...]

    @property
    def mismatches(self) -> list[InjectionRecord]:
        return [r for r in self.records if r.a != r.b]


def injection_criterion_check(alpha_max: int = 4, beta_max: int = 4) -> InjectionReport:
    recs = []
    for alpha in range(1, alpha_max + 1):
        for beta in range(1, min(alpha, beta_max) + 1):
            x = construct_S_beta_space(beta, beta)
            a = not is_compact_bruteforce(x, alpha, alpha)
            recs.append(InjectionRecord(alpha, beta, a, _injection_condition(beta, alpha)))
    return InjectionReport(tuple(recs))


# ---------------------------------------------------------------- corpora and sweeps


def all_spaces(max_points: int = 3, max_family: int = 5) -> list[FiniteSpace]:
    """Every nonempty family of at most max_family distinct subsets, for 1..max_points points."""
    out = []
    for n in range(1, max_points + 1):
        subsets = range(1 << n)
        for k in range(1, max_family + 1):
            for fam in combinations(subsets, k):
                out.append(FiniteSpace(n, fam))
    return out


def sample_spaces(count: int, seed: int, max_points: int = 6, max_family: int = 6) -> list[FiniteSpace]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_points)
        k = rng.randint(1, max_family)
        out.append(FiniteSpace(n, tuple(sorted({rng.randrange(1 << n) for _ in range(k)}))))
    return out


def simple_violations(s: FiniteSpace, bound: int = 4) -> list[str]:
    """Interval compactness vs pointwise compactness, and the splitting law."""
    c = {(m, n): is_compact_bruteforce(s, m, n) for m in range(1, bound + 1) for n in range(m, bound + 1)}
    bad = []
    for (m, n), v in c.items():
        if v != all(c[g, g] for g in range(m, n + 1)):
            bad.append(f"pointwise [{m},{n}]")
        for m2 in range(m, n + 1):
            left = all(c[m, a] for a in range(m, m2))
            if v != (left and c[m2, n]):
                bad.append(f"split [{m},{n}] at {m2}")
    return bad


def irredundant_violations(s: FiniteSpace, bound: int = 4) -> list[tuple[int, int]]:
    return [(m, n) for m in range(1, bound + 1) for n in range(m, bound + 1)
            if not irredundant_equiv_check(s, m, n)]


def _space_record(args: tuple[FiniteSpace, int]) -> list[dict]:
    s, bound = args
    base = s.to_json()
    recs = []
    for m in range(1, bound + 1):
        for n in range(m, bound + 1):
            recs.append({"space": base, "query": [m, n], "compact": is_compact_bruteforce(s, m, n),
                         "irredundant_agrees": irredundant_equiv_check(s, m, n)})
    return recs


def oracle_records(spaces: Sequence[FiniteSpace], bound: int = 4, jobs: int = 1) -> list[dict]:
    """One record per (space, [m, n]) pair, in corpus order regardless of jobs."""
    work = [(s, bound) for s in spaces]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = list(ex.map(_space_record, work, chunksize=16))
    else:
        chunks = [_space_record(w) for w in work]
    return [r for c in chunks for r in c]


def write_jsonl(path: str, records: Iterable[dict]) -> None:
    with open(path, "w") as fh:
        for r in records:
            fh.write(json.dumps(r, sort_keys=True) + "\n")


def oracle_report(max_points: int = 3, max_family: int = 5, bound: int = 4, jobs: int = 1,
                  sampled: int = 0, seed: int = 0) -> dict:
    """Summary of every finite sweep; all violation lists empty means the oracle agrees."""
    spaces = all_spaces(max_points, max_family) + sample_spaces(sampled, seed)
    simple_bad = [(s.to_json(), v) for s in spaces for v in simple_violations(s, bound)]
    irr_bad = [(s.to_json(), v) for s in spaces for v in irredundant_violations(s, bound)]
    return {
        "spaces": len(spaces),
        "simple_violations": simple_bad,
        "irredundant_violations": irr_bad,
        "covers_mismatches": covers_criterion_check(5),
        "injection_mismatches": [r.to_json() for r in injection_criterion_check(4, 4).mismatches],
    }
