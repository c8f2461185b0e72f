from collections import Counter
import math

from hypothesis import given, settings, strategies as st
import pytest

from picard_boundary.boundary import (
    boundary_profile,
    hc_cohomology_multiplicity,
    hc_triviality,
    kostant_cohomology,
    kuga_sato_profile,
    reference_profile,
)
from picard_boundary.constituents import EnumerationSpec, enumerate_constituents
from picard_boundary.lattice import TorusCharacter, degree, is_kostant_parallel, is_regular
from picard_boundary.weyl import SignType, all_elements, classify, dot_action, length, length_counts

from conftest import characters


def ch(*triples, d):
    return TorusCharacter(tuple(triples), d)


def constituents(g, r):
    for p in range(6 * g * r + 1):
        yield from enumerate_constituents(EnumerationSpec(g, r, p))


class TestKostant:
    def test_examples(self, golden):
        assert kostant_cohomology(ch((0, 0, 0), d=0), 3) == [ch((-2, 0, 2), d=0)]
        assert kostant_cohomology(ch((1, 0, -1), d=-1), 0) == [ch((1, 0, -1), d=-1)]
        q1 = kostant_cohomology(golden, 1)
        assert len(q1) == 4
        assert ch((-1, 2, -1), (0, 0, 0), d=-1) in q1

    def test_rejects_non_dominant(self):
        with pytest.raises(ValueError):
            kostant_cohomology(ch((0, 1, 0), d=0), 0)

    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_counts(self, g):
        lam = TorusCharacter(((2, 1, -1),) * g, 0)
        assert [len(kostant_cohomology(lam, q)) for q in range(3 * g + 1)] == length_counts(g)


class TestTriviality:
    def test_examples(self, golden):
        assert hc_triviality(ch((0, 0, 0), (0, 0, 0), d=0)) == 0
        assert hc_triviality(golden) is None
        assert hc_triviality(ch((-1, 2, -1), (0, 0, 0), d=-1)) == 0
        assert hc_triviality(ch((4, 0, 7), d=3)) == -3

    def test_multiplicity(self):
        assert hc_cohomology_multiplicity(3, 1, True) == 2
        assert hc_cohomology_multiplicity(2, 0, False) == 0
        assert hc_cohomology_multiplicity(1, 0, True) == 1
        assert hc_cohomology_multiplicity(3, 3, True) == 0
        assert hc_cohomology_multiplicity(3, -1, True) == 0


class TestProfile:
    def test_golden_table(self, golden):
        prof = boundary_profile(golden, 2)
        assert prof.weight_sets() == {1: [2], 2: [2], 5: [10], 6: [10]}

    def test_not_kostant_parallel_is_empty(self):
        assert boundary_profile(ch((2, 0, -2), (0, 0, 0), d=-2)).is_empty()

    def test_g1_regular(self):
        prof = boundary_profile(ch((1, 0, -1), d=-1), 1)
        assert {n: dict(c) for n, c in prof.degrees.items()} == {
            0: {0: 1},
            1: {2: 2},
            2: {6: 2},
            3: {8: 1},
        }

    def test_g_mismatch(self, golden):
        with pytest.raises(ValueError):
            boundary_profile(golden, 3)

    def test_non_dominant(self):
        with pytest.raises(ValueError):
            boundary_profile(ch((0, 1, 0), d=0))

    def test_kuga_sato_shift(self, golden):
        assert kuga_sato_profile(golden).weight_sets() == {3: [2], 4: [2], 7: [10], 8: [10]}
        zero = ch((0, 0, 0), d=0)
        assert kuga_sato_profile(zero).weight_sets() == boundary_profile(zero).weight_sets()
        assert kuga_sato_profile(ch((2, 0, -2), (0, 0, 0), d=-2)).is_empty()

    def test_witnesses_aggregate(self, golden):
        prof = boundary_profile(golden)
        for n, cs in prof.witnesses.items():
            agg = Counter()
            for c in cs:
                assert c.degree == n == c.p0 + c.q0 and c.q0 == length(c.sigma)
                assert 0 <= c.p0 <= golden.g - 1
                assert c.mu == dot_action(c.sigma, golden)
                assert hc_triviality(c.mu) == c.m
                agg[c.weight] += c.multiplicity
            assert agg == prof.degrees[n]

    @settings(max_examples=60, deadline=None)
    @given(characters(g=st.integers(1, 3), lo=-3, hi=3, dominant=True))
    def test_kernel_matches_reference(self, lam):
        a, b = boundary_profile(lam), reference_profile(lam)
        assert a.degrees == b.degrees
        assert [c.to_json() for c in a.contributions()] == [c.to_json() for c in b.contributions()]

    @settings(max_examples=80, deadline=None)
    @given(characters(g=st.integers(1, 3), lo=-3, hi=3, dominant=True))
    def test_empty_iff_not_kostant_parallel(self, lam):
        assert boundary_profile(lam).is_empty() == (not is_kostant_parallel(lam))

    @settings(max_examples=40, deadline=None)
    @given(characters(g=st.integers(1, 3), lo=-3, hi=3, dominant=True))
    def test_degree_counts(self, lam):
        g = lam.g
        prof = boundary_profile(lam)
        trivial_by_len = Counter(
            length(s) for s in all_elements(g) if hc_triviality(dot_action(s, lam)) is not None
        )
        for n in range(4 * g):
            expected = sum(
                math.comb(g - 1, p0) * trivial_by_len[n - p0] for p0 in range(g) if n - p0 >= 0
            )
            assert sum(prof.degrees.get(n, Counter()).values()) == expected


@pytest.mark.parametrize("g, r", [(2, 1), (3, 1), (2, 2)])
def test_mixed_vanishing_on_constituents(g, r):
    mixed = [s for s in all_elements(g) if classify(s) is SignType.MIXED]
    for lam in constituents(g, r):
        assert all(hc_triviality(dot_action(s, lam)) is None for s in mixed)


@pytest.mark.parametrize("g, r", [(1, 1), (2, 1), (1, 2), (3, 1)])
def test_weight_identities(g, r):
    for lam in constituents(g, r):
        p = degree(lam)
        for c in boundary_profile(lam).contributions():
            kind = c.sign_type
            assert kind is not SignType.MIXED
            if kind is SignType.TOTALLY_POSITIVE:
                assert c.weight == p - c.m * g
                assert c.m >= (0 if is_regular(lam) else -1)
                assert 0 <= c.degree <= 2 * g - 1
            else:
                assert c.weight == p + c.twist * g
                assert c.twist >= (4 if is_regular(lam) else 3)
                assert 2 * g <= c.degree <= 4 * g - 1
