import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from ordcomp import catalog as C
from ordcomp.acceptance import FUZZ_CLASSES, FUZZ_POOL, FUZZ_SPACES, catalog_violations, random_interval
from ordcomp.ordinal import ALEPH0, KAPPA_CARD, CardClass, OrdinalError, parse
from ordcomp.sums import shifted_sums
from ordcomp.transfer import ImplicationQuery, Interval, T1, card_bound, positive

P = parse
LINDELOF_SPACES = [s for s in FUZZ_SPACES if C.lindelof_ordinal(s) is not None]


def status(s, b, a=None):
    return C.is_compact(s, b, a).status


class TestProfiles:
    def test_examples(self):
        p = C.profile(C.Iit())
        assert (p.union_closed, p.t1, p.topology) == (True, False, True)
        p = C.profile(C.SBeta(P("k"), P("k*2")))
        assert (p.union_closed, p.t1, p.topology) == (False, False, False)
        assert C.profile(C.FrechetDisjointUnion((C.Ord(), C.Discrete(KAPPA_CARD)))).t1
        assert not C.profile(C.FrechetDisjointUnion((C.Ord(), C.Iit()))).t1

    def test_topology_implies_union_closed(self):
        for s in FUZZ_SPACES:
            p = C.profile(s)
            assert not p.topology or p.union_closed

    def test_sbeta_guard(self):
        with pytest.raises(OrdinalError):
            C.SBeta(P("k*2"), P("k"))


class TestCompact:
    def test_iit(self):
        assert status(C.Iit(), "k") == "no"
        assert status(C.Iit(), "k+1") == "yes"
        assert status(C.Iit(), "[2,k)") == "yes"

    def test_iit_pair(self):
        assert status(C.iit_copies(2), P("k+2"), P("k+5")) == "yes"

    def test_kappa_kappa(self):
        assert status(C.KappaKappa(), "k*2") == "no"
        assert status(C.KappaKappa(), "k+1") == "yes"

    def test_discrete_kappa(self):
        for g in ("1", "w", "k", "k*2", "k^2"):
            assert status(C.Discrete(KAPPA_CARD), g) == "no"
        assert status(C.Discrete(KAPPA_CARD), "[k+, inf)") == "yes"

    def test_ord(self):
        assert status(C.Ord(), "[k+w, inf)") == "yes"
        assert status(C.Ord(), "[w, k)") == "yes"

    def test_sbeta_covers(self):
        for b in ("3", "w+1", "k", "k*2"):
            assert status(C.x_beta(P(b)), b) == "no"

    def test_finite_matches_oracle(self):
        from ordcomp import finite
        s = C.SBeta(2, 4, "unions")
        fs = finite.construct_S_beta_space(2, 4, "unions")
        for m in range(1, 6):
            for n in range(m, 6):
                want = "yes" if finite.is_compact_bruteforce(fs, m, n) else "no"
                assert status(s, Interval(m, n)) == want

    def test_malformed(self):
        with pytest.raises(OrdinalError):
            C.is_compact(C.Iit(), "[k,3]")

    def test_never_both(self):
        # a point verdict and the verdicts of intervals around it agree
        rng = random.Random(1)
        for _ in range(300):
            s = rng.choice(FUZZ_SPACES)
            g = rng.choice(FUZZ_POOL)
            v = status(s, Interval.point(g))
            if v == "no":
                for hi in FUZZ_POOL:
                    if g <= hi:
                        assert status(s, Interval(g, hi)) != "yes"


class TestLindelof:
    def test_examples(self):
        assert C.lindelof_ordinal(C.Discrete(KAPPA_CARD)) == P("k+")
        assert C.lindelof_ordinal(C.Iit()) == P("k+1")
        assert C.lindelof_ordinal(C.Ord()) == P("k+w")
        for n in range(2, 5):
            assert C.lindelof_ordinal(C.iit_copies(n)) == P(f"k*{n}+1")
        assert C.lindelof_ordinal(C.DisjointUnion((C.Ord(), C.Ord()))) == P("k*2+w")
        for m in range(1, 4):
            assert C.lindelof_ordinal(C.WithFiniteDiscrete(C.Iit(), m)) == P(f"k+{m + 1}")
        assert C.lindelof_ordinal(C.FrechetDisjointUnion((C.Ord(), C.Ord()))) is None

    def test_consistency(self):
        assert LINDELOF_SPACES
        for s in LINDELOF_SPACES:
            lo = C.lindelof_ordinal(s)
            assert status(s, Interval(lo, None, False)) == "yes", s
            for a in FUZZ_POOL:
                if lo <= a:
                    assert status(s, Interval(lo, a)) == "yes", (s, a)
            for g in FUZZ_POOL:
                if g < lo:
                    assert status(s, Interval(g, lo, False)) == "no", (s, g)

    def test_admissible_outputs(self):
        for s in LINDELOF_SPACES:
            p, lo = C.profile(s), C.lindelof_ordinal(s)
            if p.t1:
                assert C.admissible_lindelof(lo, T1), s
            if p.card is not None and p.card <= KAPPA_CARD:
                assert C.admissible_lindelof(lo, card_bound(KAPPA_CARD)), s
            if p.card is not None and p.card <= ALEPH0:
                assert C.admissible_lindelof(lo, card_bound(ALEPH0)), s

    @pytest.mark.parametrize("b,cons,want", [
        ("k+1", "t1", False), ("k+w", "t1", True), ("k*w", "t1", True), ("w^2+5", "card_bound:w", False),
        ("5", "t1", True), ("w", "t1", True), ("k", "t1", True), ("w*2", "t1", False),
        ("w^2", "card_bound:w", True), ("k+", "card_bound:k", True),
    ])
    def test_admissible(self, b, cons, want):
        assert C.admissible_lindelof(P(b), cons) == want


class TestUnions:
    def test_incompactness_at_shifted_sums(self):
        pairs = [(C.Iit(), P("k")), (C.Ord(), P("k")), (C.KappaKappa(), P("k*2")), (C.Discrete(KAPPA_CARD), P("k*2")),
                 (C.Iit(ALEPH0), P("w"))]
        for s1, a in pairs:
            for s2, b in pairs:
                assert status(s1, a) == "no" and status(s2, b) == "no"
                u = C.DisjointUnion((s1, s2))
                for g in shifted_sums(a, b):
                    assert status(u, g) == "no", (u, g)

    def test_yes_star_sum(self):
        u = C.DisjointUnion((C.Iit(), C.Ord()))
        assert status(u, Interval(C.lindelof_ordinal(u), None, False)) == "yes"


class TestJson:
    def test_round_trip(self):
        for s in FUZZ_SPACES + (C.FrechetDisjointUnion((C.Ord(), C.Iit())),):
            d = json.loads(json.dumps(s.to_json()))
            assert C.from_json(d) == s

    def test_tagged_union(self):
        d = {"type": "disjoint_union", "parts": [{"type": "iit", "card": "k"}, {"type": "iit", "card": "k"}]}
        assert C.from_json(d) == C.iit_copies(2)


class TestEngineAgreement:
    def test_catalog_never_violates_engine(self):
        assert catalog_violations(1500, 7) == []

    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 2**32))
    def test_property(self, seed):
        rng = random.Random(seed)
        s = rng.choice(FUZZ_SPACES)
        classes = [c for c in FUZZ_CLASSES if c.admits(C.profile(s))]
        q = ImplicationQuery(random_interval(rng), random_interval(rng), rng.choice(classes))
        if status(s, q.src) == "yes" and positive(q) is not None:
            assert status(s, q.dst) != "no"
