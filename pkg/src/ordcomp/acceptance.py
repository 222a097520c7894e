"""The ten acceptance criteria as runnable checks.

Each criterion returns a Result; ``run_all`` drives them for the test suite
and for ``ordcomp selftest``.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import catalog, finite, maps
from .ordinal import (
    ALEPH0, KAPPA, KAPPA_CARD, OMEGA, ONE, Exponent, Ordinal, add, mul, natural_sum, parse, structure,
)
from .sums import is_mixed_sum, min_mixed_sum, mixed_sums, shifted_sums, star_sum
from .transfer import (
    ARBITRARY, T1, ImplicationQuery, Interval, SpaceClass, card_bound, implies_compactness, negative,
    positive,
)

P = parse


@dataclass
class Result:
    number: int
    title: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag} criterion {self.number}: {self.title} ({self.detail}; {self.seconds:.1f}s)"


def default_seed() -> int:
    return int(os.environ.get("ORDCOMP_SEED", "0"))


def random_pure(rng: random.Random) -> Ordinal:
    """Nonzero pure ordinal below w^4 with coefficients <= 3."""
    while True:
        terms = [(Exponent.pure(Ordinal.of(e)), rng.randint(1, 3)) for e in range(3, -1, -1) if rng.random() < 0.5]
        if terms:
            return Ordinal(terms)


def pure_corpus(n: int = 300, seed: int = 0) -> list[tuple[Ordinal, Ordinal]]:
    rng = random.Random(seed)
    return [(random_pure(rng), random_pure(rng)) for _ in range(n)]


# ---------------------------------------------------------------- criteria


def c1(seed: int) -> tuple[bool, str]:
    sums = shifted_sums(P("w^3+w"), P("w^2+1"))
    ok = P("w^3+w+1") in sums and P("w^3+w^2+1") in sums and P("w^3+1") not in sums
    return ok, f"{len(sums)} shifted sums"


def c2(seed: int) -> tuple[bool, str]:
    bad = 0
    corpus = pure_corpus(300, seed)
    for a, b in corpus:
        s = shifted_sums(a, b)
        if not (s[-1] == natural_sum(a, b) and s[0] == max(a, b) and add(a, b) in s and add(b, a) in s):
            bad += 1
    return bad == 0, f"{len(corpus)} pairs, {bad} violations"


def _drop_tail(x: Ordinal, n: int) -> Ordinal:
    s = structure(x)
    return add(s.limit_part, s.nat_tail - n)


def c3(seed: int) -> tuple[bool, str]:
    bad = []
    if min_mixed_sum(P("w+1"), P("w+2")) != P("w+3"):
        bad.append("w+1, w+2")
    for a, b in pure_corpus(300, seed):
        mixed, shifted = mixed_sums(a, b), shifted_sums(a, b)
        if min_mixed_sum(a, b) != mixed[0]:
            bad.append(f"min {a}, {b}")
        # mixed sums are shifted sums, and both agree on limits
        if not set(mixed) <= set(shifted) or [g for g in shifted if g.is_limit] != [g for g in mixed if g.is_limit]:
            bad.append(f"limits {a}, {b}")
        # every mixed sum is (shifted sum of a-n, b-p, limit or 0) + n + p
        na, nb = structure(a).nat_tail, structure(b).nat_tail
        shape = set()
        for n in range(na + 1):
            for p in range(nb + 1):
                a0, b0 = _drop_tail(a, n), _drop_tail(b, p)
                base = [max(a0, b0)] if a0.is_zero or b0.is_zero else shifted_sums(a0, b0)
                shape.update(add(g, Ordinal.of(n + p)) for g in base if g.is_zero or g.is_limit)
        if shape != set(mixed):
            bad.append(f"shape {a}, {b}")
    return not bad, f"{len(bad)} violations" + (f": {bad[:3]}" if bad else "")


def c4(seed: int) -> tuple[bool, str]:
    ok = star_sum(P("k+1"), P("k+1")) == P("k*2+1") and star_sum(P("k+w"), P("k+w")) == P("k*2+w")
    ok &= catalog.lindelof_ordinal(catalog.iit_copies(2)) == P("k*2+1")
    ok &= catalog.lindelof_ordinal(catalog.DisjointUnion((catalog.Ord(), catalog.Ord()))) == P("k*2+w")
    # finite m +* n against the oracle: compactness of disjoint unions of discrete spaces
    sweep_bad = 0
    spaces = [finite.discrete(k) for k in (1, 2)] + [s for s in finite.all_spaces(2, 3) if s.covered]
    for s1 in spaces:
        for s2 in spaces:
            u = finite.disjoint_union(s1, s2)
            l1 = max(finite.minimal_cover_sizes(s1.family, s1.full), default=0) + 1
            l2 = max(finite.minimal_cover_sizes(s2.family, s2.full), default=0) + 1
            lu = max(finite.minimal_cover_sizes(u.family, u.full), default=0) + 1
            if star_sum(l1, l2) != lu:
                sweep_bad += 1
    for m in range(1, 8):
        for n in range(1, 8):
            if star_sum(m, n) != Ordinal.of(m + n - 1):
                sweep_bad += 1
    return ok and sweep_bad == 0, f"union sweep mismatches {sweep_bad}"


def c5(seed: int) -> tuple[bool, str]:
    C = catalog
    want = [(C.Discrete(KAPPA_CARD), "k+"), (C.Iit(), "k+1"), (C.Ord(), "k+w"),
            (C.DisjointUnion((C.Ord(), C.Ord())), "k*2+w")]
    want += [(C.iit_copies(n), f"k*{n}+1") for n in range(2, 5)]
    want += [(C.WithFiniteDiscrete(C.Iit(), m), f"k+{m + 1}") for m in range(1, 4)]
    bad = [str(s) for s, v in want if C.lindelof_ordinal(s) != P(v)]
    return not bad, f"{len(want)} spaces" + (f", wrong: {bad}" if bad else "")


def c6(seed: int) -> tuple[bool, str]:
    inst = maps.builtin_instances()
    fails, low = [], 0
    for _, f, b, b2 in inst:
        r = maps.check_transfer(f, b, b2, 100, seed)
        if not r.passed:
            fails.append(f"{f.name} K={r.counterexample}")
        if r.checked < 100:
            low += 1
    inj = {fam: {f.injective for j, f, _, _ in inst if j == fam} for fam in maps.FAMILIES}
    inj_ok = all(v == {fam in maps.INJECTIVE_FAMILIES} for fam, v in inj.items())
    return not fails and low == 0 and inj_ok, \
        f"{len(inst)} instances, {len(fails)} failures, {low} under 100 samples, injectivity {'ok' if inj_ok else inj}"


def c7(seed: int) -> tuple[bool, str]:
    rep = finite.oracle_report(3, 5, 4)
    bad = {k: len(v) for k, v in rep.items() if k != "spaces" and v}
    return not bad, f"{rep['spaces']} spaces" + (f", violations {bad}" if bad else "")


def c8(seed: int) -> tuple[bool, str]:
    I = Interval.parse
    checks = []

    def q(src, dst, cls):
        return implies_compactness(ImplicationQuery(I(src), I(dst), cls))

    v = q("[w+1]", "[w]", T1)
    checks.append(("[w+1]=>[w] T1 implied", v.implied and bool(v.rules)))
    v = q("[w+1]", "[w]", ARBITRARY)
    checks.append(("[w+1]=>[w] arbitrary witness Iit(w)", v.not_implied and v.witness == catalog.Iit(ALEPH0)))
    v = q("[k+k]", "[k+k+k]", ARBITRARY)
    checks.append(("[k+k]=>[k+k+k] implied", v.implied and bool(v.rules)))
    v = q("[k+k]", "[k*k]", ARBITRARY)
    checks.append(("[k+k]=>[k*k] not implied", v.not_implied and isinstance(v.witness, catalog.SBeta)
                   and v.witness.beta == mul(KAPPA, KAPPA)))
    for b, lam, nxt in [("2", "w", "k"), ("w", "w", "k"), ("5", "k", "k+"), ("k", "k", "k+"), ("w+1", "k", "k+")]:
        v = q(f"[{b},{lam}]", f"[{b},{nxt})", ARBITRARY)
        checks.append((f"[{b},{lam}]=>[{b},{nxt}) implied", v.implied and "cardinal-successor" in v.rules))
    v = q("[k*k]", "[k*k+k]", card_bound(KAPPA_CARD))
    checks.append(("[k*k]=>[k*k+k] card<=k implied", v.implied))
    v = q("[k*k]", "[k^3+5]", card_bound(KAPPA_CARD))
    checks.append(("[k*k]=>[k^3+5] card<=k via small-space rule", v.implied and "small-space-kappa" in v.rules))
    v = q("[w*2]", "[w^3+1]", card_bound(ALEPH0))
    checks.append(("[w*2]=>[w^3+1] card<=w via small-space rule", v.implied and "small-space-omega" in v.rules))
    v = q("[w*2]", "[w^3+1]", ARBITRARY)
    checks.append(("[w*2]=>[w^3+1] arbitrary not implied", not v.implied))
    bad = [name for name, ok in checks if not ok]
    return not bad, f"{len(checks)} queries" + (f", failed: {bad}" if bad else "")


def c9(seed: int) -> tuple[bool, str]:
    A = catalog.admissible_lindelof
    cases = [("k+1", "t1", False), ("k+w", "t1", True), ("k*w", "t1", True), ("w*2", "t1", False),
             ("w^2+5", "card_bound:w", False)]
    bad = [(b, c) for b, c, want in cases if A(P(b), c) != want]
    return not bad, f"{len(cases)} cases" + (f", wrong: {bad}" if bad else "")


# ---------------------------------------------------------------- consistency fuzzing

FUZZ_POOL = tuple(P(x) for x in (
    "1 2 3 4 5 w w+1 w+2 w*2 w*2+1 w*3 w^2 w^2+1 w^2+w w^3 w^w k k+1 k+2 k+w k+w+1 k+w^2 k*2 k*2+1 "
    "k*2+w k*3 k*w k*w+1 k^2 k^2+1 k^2+k k^2+k*2 k^3 k^3+5 k^w k+ k++1 k++w k+*2 k++k k++k+1").split())

FUZZ_CLASSES = tuple(SpaceClass.parse(c) for c in (
    "arbitrary", "union_closed", "t1", "lambda_t1:w", "lambda_t1:k", "card_bound:w", "card_bound:k",
    "card_bound_union_closed:w", "card_bound_union_closed:k"))


def random_interval(rng: random.Random) -> Interval:
    a, b = sorted((rng.choice(FUZZ_POOL), rng.choice(FUZZ_POOL)), key=lambda x: x.key)
    r = rng.random()
    if r < 0.5:
        return Interval(b, b)
    if r < 0.8:
        return Interval(a, b)
    if r < 0.9 and a < b:
        return Interval(a, b, False)
    return Interval(a, None, False)


def random_query(rng: random.Random) -> ImplicationQuery:
    return ImplicationQuery(random_interval(rng), random_interval(rng), rng.choice(FUZZ_CLASSES))


def _fuzz_chunk(args: tuple[int, int]) -> list[str]:
    seed, n = args
    rng = random.Random(seed)
    bad = []
    for _ in range(n):
        q = random_query(rng)
        if positive(q) is not None and negative(q) is not None:
            bad.append(str(q))
    return bad


FUZZ_SPACES = catalog.CATALOG + (
    catalog.x_beta(P("k*2")), catalog.x_beta(P("k^2")), catalog.x_beta(P("w*2")), catalog.x_beta(3),
    catalog.SBeta(3, 4, "unions"), catalog.SBeta(2, 3, "topology"))


def catalog_violations(n: int, seed: int) -> list[str]:
    """Engine implications a catalog space would violate (src Yes, Implied, dst No)."""
    rng = random.Random(seed)
    bad = []
    for _ in range(n):
        s = rng.choice(FUZZ_SPACES)
        prof = catalog.profile(s)
        classes = [c for c in FUZZ_CLASSES if c.admits(prof)]
        q = ImplicationQuery(random_interval(rng), random_interval(rng), rng.choice(classes))
        if catalog.is_compact(s, q.src).status != "yes" or positive(q) is None:
            continue
        if catalog.is_compact(s, q.dst).status == "no":
            bad.append(f"{s}: {q}")
    return bad


def c10(seed: int, n: int = 10_000, jobs: int = 1) -> tuple[bool, str]:
    chunks = [(seed * 1000 + i, n // 20) for i in range(20)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            contra = [b for part in ex.map(_fuzz_chunk, chunks) for b in part]
    else:
        contra = [b for c in chunks for b in _fuzz_chunk(c)]
    cat = catalog_violations(n // 2, seed)
    ok = not contra and not cat
    return ok, f"{n} queries, {len(contra)} contradictions, {n // 2} catalog probes, {len(cat)} violations" + \
        (f": {(contra + cat)[:3]}" if not ok else "")


CRITERIA: list[tuple[int, str, Callable[..., tuple[bool, str]]]] = [
    (1, "shifted-sum example triple", c1),
    (2, "shifted-sum extrema laws", c2),
    (3, "mixed-sum laws", c3),
    (4, "star-sum values and finite sweep", c4),
    (5, "Lindelof catalog", c5),
    (6, "transfer maps", c6),
    (7, "finite oracle sweeps", c7),
    (8, "engine verdicts", c8),
    (9, "Lindelof admissibility", c9),
    (10, "consistency meta-suite", c10),
]


def run(number: int, seed: int | None = None, jobs: int = 1) -> Result:
    seed = default_seed() if seed is None else seed
    _, title, fn = CRITERIA[number - 1]
    t = time.time()
    try:
        ok, detail = fn(seed, jobs=jobs) if number == 10 else fn(seed)
    except Exception as e:  # a crash is a failed criterion, reported like one
        ok, detail = False, f"error: {type(e).__name__}: {e}"
    return Result(number, title, ok, detail, time.time() - t)


def run_all(seed: int | None = None, jobs: int = 1) -> list[Result]:
    return [run(i, seed, jobs) for i in range(1, len(CRITERIA) + 1)]
