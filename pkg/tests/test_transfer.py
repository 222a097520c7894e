from functools import lru_cache
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from ordcomp import catalog, finite
from ordcomp.acceptance import FUZZ_CLASSES, FUZZ_POOL, random_interval
from ordcomp.ordinal import ALEPH0, KAPPA_CARD, CardClass, OrdinalError, parse
from ordcomp.transfer import (
    ARBITRARY, T1, UNION_CLOSED, ImplicationQuery, Interval, SpaceClass, card_bound, implies,
    implies_compactness, lambda_t1, negative, positive,
)

P = parse
FINITE_CLASSES = (ARBITRARY, UNION_CLOSED, T1, lambda_t1(ALEPH0), card_bound(ALEPH0),
                  card_bound(KAPPA_CARD, union_closed=True))
FINITE_INTERVALS = [Interval(m, n) for m in range(1, 6) for n in range(m, 6)]


def finite_profile(s: finite.FiniteSpace) -> catalog.ClassProfile:
    # a finite family closed under removing one point is closed under removing any finite set
    return catalog.ClassProfile(s.union_closed, s.t1, False, s.t1, CardClass.finite(s.size))


@lru_cache(maxsize=None)
def corpus():
    return tuple(finite.all_spaces(3, 5))


def compact(s, iv: Interval) -> bool:
    return finite.is_compact_bruteforce(s, iv.lo.to_int(), iv.hi.to_int())


def finite_witness(w) -> finite.FiniteSpace | None:
    if isinstance(w, catalog.Discrete) and w.card.is_finite:
        return finite.discrete(w.card.n)
    if isinstance(w, catalog.SBeta) and w.is_finite and w.alpha.to_int() <= 5:
        return finite.construct_S_beta_space(w.beta.to_int(), w.alpha.to_int(), w.variant)
    return None


class TestParsing:
    def test_interval(self):
        assert Interval.parse("[w+1]") == Interval(P("w+1"), P("w+1"))
        assert Interval.parse("[3, w)") == Interval(P("3"), P("w"), False)
        assert Interval.parse("[k, inf)").hi is None
        assert Interval.parse("[2,5]").end == P("6")

    @pytest.mark.parametrize("bad", ["3", "[0]", "[5,3]", "[3,3)", "(1,2]", "[w+]"])
    def test_bad_interval(self, bad):
        with pytest.raises(OrdinalError):
            Interval.parse(bad)

    def test_class(self):
        assert SpaceClass.parse("t1") == T1
        assert SpaceClass.parse("lambda_t1:k") == lambda_t1(KAPPA_CARD)
        assert SpaceClass.parse("card-bound:w") == card_bound(ALEPH0)
        with pytest.raises(ValueError):
            SpaceClass.parse("card_bound:q")

    def test_json(self):
        v = implies("[k+k]", "[k*k]")
        d = json.loads(json.dumps(v.to_json()))
        assert d["verdict"] == "not_implied" and d["rules"] and d["witness"]["type"] == "s_beta"
        assert catalog.from_json(d["witness"]) == v.witness


class TestExamples:
    def test_interleave(self):
        v = implies("[k+k]", "[k+k+k]")
        assert v.implied and v.rules

    def test_no_transfer_map(self):
        v = implies("[k+k]", "[k*k]")
        assert v.not_implied and v.witness == catalog.x_beta(P("k*k"))

    def test_t1_vs_arbitrary(self):
        assert implies("[w+1]", "[w]", T1).implied
        v = implies("[w+1]", "[w]", ARBITRARY)
        assert v.not_implied and v.witness == catalog.Iit(ALEPH0)

    def test_cardinal_successor(self):
        v = implies("[5,k]", "[5,k+)")
        assert v.implied and "cardinal-successor" in v.rules

    def test_small_space(self):
        assert implies("[k*k]", "[k^3+5]", "card_bound:k").implied
        assert not implies("[k*k]", "[k^3+5]", ARBITRARY).implied

    def test_unknown_is_allowed(self):
        # no finite rule separates T1 spaces at [2] and [3]
        assert implies("[2]", "[3]", T1).status in ("unknown", "not_implied")

    def test_reflexive(self):
        for x in FUZZ_POOL[:20]:
            assert implies(Interval.point(x), Interval.point(x)).implied


class TestFiniteSoundness:
    """Engine verdicts on finite queries never disagree with brute force."""

    def test_against_corpus(self):
        spaces = corpus()
        bad = []
        for cls in FINITE_CLASSES:
            members = [s for s in spaces if cls.admits(finite_profile(s))]
            assert members
            for src in FINITE_INTERVALS:
                for dst in FINITE_INTERVALS:
                    v = implies_compactness(ImplicationQuery(src, dst, cls))
                    if v.implied:
                        for s in members:
                            if compact(s, src) and not compact(s, dst):
                                bad.append((str(cls), str(src), str(dst), s.to_json()))
                                break
                    elif v.not_implied:
                        fs = finite_witness(v.witness)
                        if fs is not None and not (compact(fs, src) and not compact(fs, dst)):
                            bad.append((str(cls), str(src), str(dst), "witness", str(v.witness)))
        assert bad == []

    def test_witness_in_class(self):
        for cls in FINITE_CLASSES:
            for src in FINITE_INTERVALS:
                for dst in FINITE_INTERVALS:
                    v = implies_compactness(ImplicationQuery(src, dst, cls))
                    if v.not_implied:
                        assert cls.admits(catalog.profile(v.witness))
                        assert catalog.is_compact(v.witness, src).status == "yes"
                        assert catalog.is_compact(v.witness, dst).status == "no"


class TestConsistency:
    @settings(max_examples=300, deadline=None)
    @given(st.integers(0, 2**32))
    def test_never_both(self, seed):
        rng = random.Random(seed)
        q = ImplicationQuery(random_interval(rng), random_interval(rng), rng.choice(FUZZ_CLASSES))
        assert positive(q) is None or negative(q) is None

    @settings(max_examples=150, deadline=None)
    @given(st.integers(0, 2**32))
    def test_monotone_closure(self, seed):
        rng = random.Random(seed)
        src = random_interval(rng)
        a, b = sorted(rng.sample(FUZZ_POOL, 2), key=lambda x: x.key)
        cls = rng.choice(FUZZ_CLASSES)
        if not implies(src, Interval(a, b), cls).implied:
            return
        lo = rng.choice([x for x in FUZZ_POOL if a <= x <= b])
        hi = rng.choice([x for x in FUZZ_POOL if lo <= x <= b])
        assert implies(src, Interval(lo, hi), cls).implied

    @settings(max_examples=150, deadline=None)
    @given(st.integers(0, 2**32))
    def test_class_monotone(self, seed):
        # a verdict for all spaces holds for every subclass
        rng = random.Random(seed)
        src, dst = random_interval(rng), random_interval(rng)
        if implies(src, dst, ARBITRARY).implied:
            for cls in FUZZ_CLASSES:
                assert not implies(src, dst, cls).not_implied

    def test_witness_checks_out(self):
        rng = random.Random(3)
        seen = 0
        for _ in range(400):
            q = ImplicationQuery(random_interval(rng), random_interval(rng), rng.choice(FUZZ_CLASSES))
            v = implies_compactness(q)
            if v.not_implied:
                seen += 1
                assert q.cls.admits(catalog.profile(v.witness))
                assert catalog.is_compact(v.witness, q.src).status == "yes"
                assert catalog.is_compact(v.witness, q.dst).status == "no"
        assert seen > 0
