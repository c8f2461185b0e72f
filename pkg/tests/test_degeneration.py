import pytest

from picard_boundary.boundary import boundary_profile
from picard_boundary.constituents import EnumerationSpec, enumerate_constituents
from picard_boundary.degeneration import (
    brute_force_by_degree,
    brute_force_weights,
    closed_form_weights,
    compare,
    ledger_cells,
    load_ledger,
    unlisted_mismatches,
)
from picard_boundary.lattice import TorusCharacter
from picard_boundary.weyl import WeylElement


def slow_brute(g, r, p, k):
    """Union of degree-k weight sets over per-character profiles (no batched kernel)."""
    out = set()
    for lam in enumerate_constituents(EnumerationSpec(g, r, p)):
        out |= boundary_profile(lam).weight_set(k)
    return out


class TestClosedForm:
    def test_examples(self):
        assert closed_form_weights(1, 1, 7, 0) == set()
        assert closed_form_weights(2, 1, 2, 0) == {0, 2}
        assert closed_form_weights(2, 1, 1, 1) == {1}

    def test_special_rows(self):
        g, r = 2, 1
        assert [closed_form_weights(g, r, 1, k) for k in range(8)] == [
            set(), {1}, {1}, set(), set(), {9}, {9}, set()
        ]
        assert closed_form_weights(g, r, 11, 2) == {11}
        assert closed_form_weights(g, r, 11, 6) == {19}

    def test_k_range(self):
        with pytest.raises(ValueError):
            closed_form_weights(2, 1, 2, 8)
        with pytest.raises(ValueError):
            closed_form_weights(2, 1, 2, -1)

    def test_trivial_coefficients(self):
        assert closed_form_weights(1, 1, 0, 0) == {0}

    @pytest.mark.parametrize("g, r", [(1, 1), (2, 1), (3, 1), (2, 2)])
    def test_rows_a_and_d_are_k_independent(self, g, r):
        for p in range(6 * g * r + 1):
            if p in (1, 6 * g * r - 1):
                continue
            assert len({frozenset(closed_form_weights(g, r, p, k)) for k in range(g)}) == 1
            assert len({frozenset(closed_form_weights(g, r, p, k)) for k in range(3 * g, 4 * g)}) == 1


class TestBruteForce:
    def test_examples(self):
        assert brute_force_weights(2, 1, 2, 0) == {0, 2}
        assert brute_force_weights(1, 1, 7, 0) == set()
        assert brute_force_weights(2, 1, 1, 4) == {7}

    def test_derived_witness(self):
        lam = TorusCharacter(((0, 0, -1), (0, 0, 0)), 0)
        hits = [c for c in boundary_profile(lam).witnesses[4] if c.weight == 7]
        assert any(
            c.sigma == WeylElement(("r132", "r123"))
            and c.mu == TorusCharacter(((-1, -2, 2), (-2, 1, 1)), 0)
            and c.twist == 3
            for c in hits
        )

    @pytest.mark.parametrize("g, r", [(1, 1), (2, 1), (1, 2)])
    def test_matches_per_character_profiles(self, g, r):
        for p in range(6 * g * r + 1):
            fast = brute_force_by_degree(g, r, p)
            for k in range(4 * g):
                assert fast[k] == slow_brute(g, r, p, k)

    @pytest.mark.parametrize("g, r", [(1, 1), (2, 1), (3, 1)])
    def test_weights_have_admissible_form(self, g, r):
        for p in range(6 * g * r + 1):
            for k, ws in brute_force_by_degree(g, r, p).items():
                for w in ws:
                    assert (w - p) % g == 0
                    m = (p - w) // g
                    if k <= 2 * g - 1 and m >= -1:
                        continue
                    assert k >= 2 * g and -m >= 3

    @pytest.mark.parametrize("g, r", [(1, 1), (2, 1)])
    def test_duality_cardinality(self, g, r):
        n = 6 * g * r
        for p in range(n + 1):
            assert len(enumerate_constituents(EnumerationSpec(g, r, p))) == len(
                enumerate_constituents(EnumerationSpec(g, r, n - p))
            )


class TestCompare:
    def test_g2_cells(self):
        rep = compare(2, 1)
        assert len(rep.entries) == 13 * 8
        assert rep.cell(2, 0).match
        cell = rep.cell(1, 4)
        assert not cell.match
        assert cell.brute_force == [7] and cell.closed_form == []
        assert any(
            c.source == TorusCharacter(((0, 0, -1), (0, 0, 0)), 0) and c.weight == 7
            for c in cell.witnesses
        )

    def test_g1_trivial_cell(self):
        cell = compare(1, 1).cell(0, 0)
        assert cell.match and cell.brute_force == [0]

    def test_witness_coverage(self):
        rep = compare(2, 1)
        for e in rep.mismatches():
            extra = set(e.brute_force) - set(e.closed_form)
            assert {c.weight for c in e.witnesses} == extra
            assert all(c.degree == e.k for c in e.witnesses)

    def test_parallel_workers_same_result(self):
        a = compare(1, 1, workers=1).to_json()
        b = compare(1, 1, workers=2).to_json()
        assert a == b

    def test_tsv_marks_mismatches(self):
        tsv = compare(2, 1, p_range=[1, 2]).to_tsv()
        lines = tsv.splitlines()
        assert lines[0] == "p\\k\t" + "\t".join(str(k) for k in range(8))
        assert lines[2].split("\t")[1] == "0,2"
        assert lines[1].split("\t")[5] == "7!"


class TestLedger:
    def test_bundled_ledger_covers_observed_mismatches(self):
        ledger = load_ledger()
        assert (2, 1, 1, 4) in ledger_cells(ledger)
        for g, r in [(1, 1), (2, 1)]:
            assert unlisted_mismatches(compare(g, r), ledger) == []

    def test_every_entry_has_a_note(self):
        for cell in load_ledger():
            assert set(cell) == {"g", "r", "p", "k", "note"}
            assert cell["note"]

    def test_custom_ledger(self, tmp_path):
        path = tmp_path / "ledger.json"
        path.write_text('[{"g": 2, "r": 1, "p": 1, "k": 4, "note": "x"}]')
        rep = compare(2, 1, p_range=[1])
        left = unlisted_mismatches(rep, load_ledger(path))
        assert (1, 4) not in {(e.p, e.k) for e in left}
        assert left
