from itertools import combinations
import json

import pytest
from hypothesis import given, settings, strategies as st

from ordcomp.finite import (
    FiniteSpace, all_spaces, compact_by_sequences, compact_irredundant, construct_S_beta_space, covers,
    covers_criterion_check, discrete, disjoint_union, frechet_union, injection_criterion_check, irredundant_equiv_check,
    is_WZ_compact, is_compact_bruteforce, oracle_records, oracle_report, s_beta_points, simple_violations,
    write_jsonl,
)
from ordcomp.ordinal import Ordinal
from ordcomp.sums import shifted_sums, star_sum


@st.composite
def spaces(draw, max_points=4, max_family=5):
    n = draw(st.integers(1, max_points))
    fam = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=1, max_size=max_family, unique=True))
    return FiniteSpace(n, tuple(fam))


def incompact_at(s, g):
    return not is_compact_bruteforce(s, g, g)


class TestBruteforce:
    def test_discrete_two(self):
        assert not is_compact_bruteforce(discrete(2), 2, 2)

    def test_m_above_n(self):
        for s in all_spaces(2, 3):
            for n in range(1, 4):
                assert is_compact_bruteforce(s, n + 1, n)

    def test_whole_set_member(self):
        s = FiniteSpace.from_sets(2, [{0, 1}])
        assert is_compact_bruteforce(s, 2, 3)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            is_compact_bruteforce(discrete(1), 0, 1)

    def test_against_literal_definition(self):
        for s in all_spaces(2, 4) + [discrete(3), construct_S_beta_space(2, 3)]:
            for m in range(1, 4):
                for n in range(m, 4):
                    assert is_compact_bruteforce(s, m, n) == compact_by_sequences(s, m, n), (s, m, n)

    @settings(max_examples=80, deadline=None)
    @given(spaces(3, 4), st.integers(1, 3), st.integers(1, 3))
    def test_literal_property(self, s, m, n):
        assert is_compact_bruteforce(s, m, n) == compact_by_sequences(s, m, n)


class TestIrredundant:
    def test_discrete_two(self):
        s = discrete(2)
        assert irredundant_equiv_check(s, 2, 2) and not compact_irredundant(s, 2, 2)

    def test_singleton(self):
        s = FiniteSpace.from_sets(1, [{0}])
        assert all(irredundant_equiv_check(s, m, n) for m in range(1, 5) for n in range(1, 5))
        assert all(is_compact_bruteforce(s, m, n) for m in range(2, 5) for n in range(1, 5))
        # the empty subfamily never covers a nonempty space
        assert not any(is_compact_bruteforce(s, 1, n) for n in range(1, 5))

    def test_exhaustive(self):
        for s in all_spaces(3, 4):
            for m in range(1, 5):
                for n in range(m, 5):
                    assert irredundant_equiv_check(s, m, n), (s, m, n)


class TestSBeta:
    def test_points(self):
        pts = s_beta_points(2, 3)
        assert pts == [frozenset(), frozenset({0}), frozenset({1}), frozenset({2})]
        s = construct_S_beta_space(2, 3)
        assert s.size == 4 and set(s.members(s.family[0])) == {0, 2, 3}

    def test_cover_examples(self):
        s = construct_S_beta_space(2, 3)
        assert covers(s, [0, 1]) and not covers(s, [0])

    def test_single_point(self):
        s = construct_S_beta_space(1, 2)
        assert s.size == 1 and all(covers(s, [i]) for i in range(2))

    def test_covers_criterion(self):
        assert covers_criterion_check(5) == []

    def test_variants(self):
        for v in ("plain", "unions", "topology", "tychonoff"):
            s = construct_S_beta_space(2, 3, v)
            assert s.family[:3] == construct_S_beta_space(2, 3).family[:3]
            if v != "plain":
                assert s.union_closed
        assert construct_S_beta_space(2, 3, "tychonoff").t1

    def test_errors(self):
        with pytest.raises(ValueError):
            construct_S_beta_space(3, 2)
        with pytest.raises(ValueError):
            construct_S_beta_space(1, 2, "bogus")

    def test_injection_criterion(self):
        rep = injection_criterion_check(4, 4)
        assert rep.mismatches == []
        rec = {(r.alpha, r.beta): r for r in rep.records}
        assert not rec[3, 2].a and not rec[3, 2].b
        assert all(rec[b, b].a and rec[b, b].b for b in range(1, 5))


class TestWZ:
    def test_examples(self):
        s = discrete(2)
        assert not is_WZ_compact(s, 2, [{0}, {1}])
        assert is_WZ_compact(s, 2, [{0, 1}])

    def test_matches_interval(self):
        for s in all_spaces(2, 3):
            for z in range(1, 4):
                for m in range(1, z + 1):
                    w = [h for k in range(m) for h in combinations(range(z), k)]
                    assert is_WZ_compact(s, z, w) == is_compact_bruteforce(s, m, z)

    def test_bad_index(self):
        with pytest.raises(ValueError):
            is_WZ_compact(discrete(1), 2, [{5}])


class TestUnions:
    def test_disjoint_points(self):
        a = FiniteSpace.from_sets(1, [{0}])
        u = disjoint_union(a, a)
        assert u.size == 2 and set(u.family) == {0b01, 0b10, 0b11}

    def test_frechet_t1(self):
        t1 = FiniteSpace.from_sets(2, [set(), {0}, {1}, {0, 1}])
        assert t1.t1
        f = frechet_union([t1, t1])
        assert f.size == 5 and f.t1

    @settings(max_examples=60, deadline=None)
    @given(spaces(2, 4), spaces(2, 4))
    def test_union_incompactness_at_shifted_sums(self, s1, s2):
        u = disjoint_union(s1, s2)
        for a in range(1, 4):
            for b in range(1, 4):
                if incompact_at(s1, a) and incompact_at(s2, b):
                    for g in shifted_sums(Ordinal.of(a), Ordinal.of(b)):
                        assert incompact_at(u, g.to_int()), (a, b, g)

    @settings(max_examples=60, deadline=None)
    @given(spaces(2, 4), spaces(2, 4), st.integers(1, 4))
    def test_union_compactness_star_sum(self, s1, s2, n):
        m1 = next((m for m in range(1, n + 2) if is_compact_bruteforce(s1, m, n)), None)
        m2 = next((m for m in range(1, n + 2) if is_compact_bruteforce(s2, m, n)), None)
        m = star_sum(Ordinal.of(m1), Ordinal.of(m2)).to_int()
        assert m == m1 + m2 - 1
        assert m > n or is_compact_bruteforce(disjoint_union(s1, s2), m, n)


class TestSweeps:
    def test_simple_laws(self):
        for s in all_spaces(3, 3):
            assert simple_violations(s, 4) == []

    def test_report_clean(self):
        rep = oracle_report(2, 4, 3)
        assert rep["spaces"] > 0
        assert all(v == [] for k, v in rep.items() if k != "spaces")

    def test_records_deterministic(self, tmp_path):
        sp = all_spaces(2, 2)
        r1, r2 = oracle_records(sp, 3), oracle_records(sp, 3, jobs=2)
        assert r1 == r2
        p = tmp_path / "o.jsonl"
        write_jsonl(str(p), r1)
        lines = p.read_text().splitlines()
        assert len(lines) == len(r1) and json.loads(lines[0])["query"] == [1, 1]
